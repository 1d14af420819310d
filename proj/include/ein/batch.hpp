#pragma once

#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

namespace ein::batch {

struct Outcome {
  bool ok = true;
  nlohmann::json witness;
};

/// Runs fn(0..count-1) and returns results in index order.  threads <= 1 is
/// the serial reference path; otherwise iterations are scheduled across an
/// OpenMP team.  Trials must be independent (each derives its own RNG), so
/// the two paths produce identical results.
inline std::vector<Outcome> run(int count, const std::function<Outcome(int)>& fn,
                                int threads) {
  std::vector<Outcome> results(count);
  const auto guarded = [&fn](int i) -> Outcome {
    try {
      return fn(i);
    } catch (const std::exception& e) {
      return Outcome{false, nlohmann::json{{"error", e.what()}, {"trial", i}}};
    }
  };

#ifdef _OPENMP
  if (threads != 1) {
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
    for (int i = 0; i < count; ++i) results[i] = guarded(i);
    return results;
  }
#endif
  for (int i = 0; i < count; ++i) results[i] = guarded(i);
  return results;
}

/// First failing outcome by index, as (trial, witness); ok when none failed.
inline Outcome collect(const std::vector<Outcome>& results) {
  for (size_t i = 0; i < results.size(); ++i) {
    if (!results[i].ok) {
      nlohmann::json w = results[i].witness;
      if (!w.contains("trial")) w["trial"] = int(i);
      return Outcome{false, w};
    }
  }
  return Outcome{};
}

}  // namespace ein::batch
