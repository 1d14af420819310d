#pragma once

#include <gmpxx.h>

#include <string>

#include "ein/errors.hpp"

namespace ein {

/// Exact rational scalar.  All algebra in the library runs on this type;
/// floating point appears only in the explicitly float-flagged limit paths.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
  check_domain(den != 0, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical "num/den" encoding, lowest terms, den > 0.
inline std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "n", "n/d", or any base-10 integer pair.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r{mpz_class(s)};
      return r;
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw input_error("rational literal with zero denominator: " + s);
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw input_error("bad rational literal: " + s);
  }
}

inline double rat_double(const Rat& r) { return r.get_d(); }

}  // namespace ein
