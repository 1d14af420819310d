#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ein/json_io.hpp"

namespace ein {

/// Configuration for the seeded verification suites.
struct SuiteConfig {
  std::vector<Signature> signatures{Signature(1, 2), Signature(1, 3), Signature(2, 2)};
  int trials = 100;
  std::uint64_t seed = 42;
  std::vector<std::string> suites{"forms",  "liealg",   "nilpotency",
                                  "model",  "holonomy", "centralizer"};
  int threads = 0;  // 0: library default team, 1: serial reference path
};

struct CheckRecord {
  std::string name;
  std::string suite;
  std::string signature;
  std::string status;  // pass | fail | skip
  json witness;        // null unless fail/skip carries detail
  double ms = 0;       // excluded from the canonical (deterministic) report
};

struct Report {
  SuiteConfig config;
  std::vector<CheckRecord> checks;  // sorted by (name, signature)
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

const std::vector<std::string>& known_suites();

/// Runs every registered check of the selected suites at every configured
/// signature.  Deterministic for fixed (seed, config): trials derive their
/// streams from the seed and the check label, and assembly is order-stable,
/// so the serial and OpenMP paths agree record for record.
Report run_suite(const SuiteConfig& cfg);

/// Canonical JSON ("report_version": 1).  Timings are opt-in and excluded
/// from the byte-determinism contract.
json report_to_json(const Report& report, bool include_timings = false);

}  // namespace ein
