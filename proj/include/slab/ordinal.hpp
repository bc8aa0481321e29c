#pragma once

// Ordinals below epsilon_0 in Cantor normal form:
//   w^e1*c1 + w^e2*c2 + ... with e1 > e2 > ... and every ci >= 1.
// The empty term list is 0. This is all the ordinal machinery the family
// recursion needs: compare, zero/successor/limit classification, and a fixed
// fundamental sequence for limits. There is deliberately no general ordinal
// arithmetic here.

#include <cstdint>
#include <string>
#include <vector>

namespace slab {

class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  static Ordinal nat(uint64_t n);
  static Ordinal omega();
  // w^exp * coeff as a single term.
  static Ordinal power(const Ordinal& exp, uint64_t coeff = 1);
  // Validated construction from a term list (exponents strictly decreasing,
  // coefficients >= 1).
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_nat() const;
  uint64_t nat_value() const;  // valid when is_nat()

  enum class Kind { Zero, Successor, Limit };
  Kind classify() const;

  // Predecessor of a successor ordinal. Caller must check classify() first.
  Ordinal predecessor() const;

  // n-th element (n >= 1) of the fixed fundamental sequence of a limit
  // ordinal, by the usual rules:
  //   (b + w^(g+1))[n] = b + w^g * n
  //   (b + w^g)[n]     = b + w^(g[n])   for g a limit.
  // Only called on limits; every report records that this is the convention
  // in use, since the family below a limit ordinal depends on it.
  Ordinal fundamental(uint64_t n) const;

  const std::vector<Term>& terms() const { return terms_; }

  std::string str() const;

  friend int compare(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Ordinal& a, const Ordinal& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const Ordinal& a, const Ordinal& b) {
    return compare(a, b) < 0;
  }

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exp;
  uint64_t coeff = 1;
};

// -1 / 0 / +1. Lexicographic over (exponent, coefficient) term pairs, which
// matches ordinal order for normal forms.
int compare(const Ordinal& a, const Ordinal& b);

// Grammar:  sum  := term ("+" term)*
//           term := "w" ("^" atom)? ("*" nat)? | nat
//           atom := "(" sum ")" | "w" ("^" atom)? | nat
// Whitespace free around tokens is allowed. Exponents must be strictly
// decreasing (true normal form); anything else is rejected with a position.
Ordinal parse_ordinal(const std::string& text);

// Tag recorded in every report next to any limit-ordinal computation.
inline const char* fundamental_sequence_convention() {
  return "cnf-wainer:(b+w^(g+1))[n]=b+w^g*n;(b+w^g)[n]=b+w^(g[n])";
}

}  // namespace slab
