#pragma once

// Exact rational scalar used everywhere in the library. No floating point
// enters any norm or constant; values are GMP rationals kept canonical.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace slab {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rabs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline const Rat& rmax(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline const Rat& rmin(const Rat& a, const Rat& b) { return a < b ? a : b; }

// "3/4", "-2", "5" -> exact value. Used by the CLI for coefficients.
inline Rat parse_rat(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Reports carry rationals as [num, den] pairs so they stay exact and
// byte-stable across platforms.
inline nlohmann::ordered_json rat_json(const Rat& q) {
  return nlohmann::ordered_json::array(
      {q.get_num().get_str(), q.get_den().get_str()});
}

}  // namespace slab
