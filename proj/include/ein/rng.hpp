#pragma once

#include <cstdint>
#include <string>

#include "ein/rational.hpp"

namespace ein {

/// splitmix64: 64-bit seed, reproducible stream, cheap to fork per trial.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive.
  long uniform(long lo, long hi) {
    check_domain(lo <= hi, "uniform: empty range");
    const std::uint64_t span = std::uint64_t(hi - lo) + 1;
    return lo + long(next() % span);
  }

  /// Small rational with |num| <= max_num, 1 <= den <= max_den.
  Rat rational(long max_num = 9, long max_den = 4) {
    return rat_of(uniform(-max_num, max_num), uniform(1, max_den));
  }

  /// Nonzero variant of rational().
  Rat rational_nonzero(long max_num = 9, long max_den = 4) {
    for (;;) {
      Rat r = rational(max_num, max_den);
      if (r != 0) return r;
    }
  }

  /// Deterministic fork: child stream independent of this one's future use.
  Rng fork(std::uint64_t salt) const {
    Rng child(state_ ^ (0x632be59bd9b4e019ULL + salt * 0x9e3779b97f4a7c15ULL));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a over a label; used to derive per-check streams from the suite seed.
inline std::uint64_t hash_label(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace ein
