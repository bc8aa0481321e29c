#include "slab/ordinal.hpp"

#include <cctype>
#include <stdexcept>

namespace slab {

Ordinal Ordinal::nat(uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back(Term{Ordinal(), n});
  return o;
}

Ordinal Ordinal::omega() { return power(nat(1), 1); }

Ordinal Ordinal::power(const Ordinal& exp, uint64_t coeff) {
  Ordinal o;
  if (coeff > 0) o.terms_.push_back(Term{exp, coeff});
  return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff < 1)
      throw std::invalid_argument("ordinal term with zero coefficient");
    if (i > 0 && compare(terms[i].exp, terms[i - 1].exp) >= 0)
      throw std::invalid_argument("ordinal exponents not strictly decreasing");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

bool Ordinal::is_nat() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

uint64_t Ordinal::nat_value() const {
  if (!is_nat()) throw std::logic_error("nat_value on infinite ordinal");
  return terms_.empty() ? 0 : terms_[0].coeff;
}

Ordinal::Kind Ordinal::classify() const {
  if (terms_.empty()) return Kind::Zero;
  return terms_.back().exp.is_zero() ? Kind::Successor : Kind::Limit;
}

Ordinal Ordinal::predecessor() const {
  if (classify() != Kind::Successor)
    throw std::logic_error("predecessor of a non-successor ordinal");
  Ordinal o = *this;
  if (o.terms_.back().coeff > 1)
    o.terms_.back().coeff -= 1;
  else
    o.terms_.pop_back();
  return o;
}

Ordinal Ordinal::fundamental(uint64_t n) const {
  if (classify() != Kind::Limit)
    throw std::logic_error("fundamental sequence of a non-limit ordinal");
  if (n < 1) throw std::logic_error("fundamental sequence index starts at 1");

  // Split off the last term: this = prefix + w^g * c with g > 0.
  Ordinal prefix = *this;
  Term last = prefix.terms_.back();
  prefix.terms_.pop_back();
  // Fold all but one copy of w^g back into the prefix.
  if (last.coeff > 1) prefix.terms_.push_back(Term{last.exp, last.coeff - 1});

  const Ordinal& g = last.exp;
  if (g.classify() == Kind::Successor) {
    // (prefix + w^(g'+1))[n] = prefix + w^g' * n
    prefix.terms_.push_back(Term{g.predecessor(), n});
  } else {
    // g is a limit: (prefix + w^g)[n] = prefix + w^(g[n])
    prefix.terms_.push_back(Term{g.fundamental(n), 1});
  }
  return prefix;
}

int compare(const Ordinal& a, const Ordinal& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = compare(a.terms_[i].exp, b.terms_[i].exp);
    if (c != 0) return c;
    if (a.terms_[i].coeff != b.terms_[i].coeff)
      return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
  }
  if (a.terms_.size() == b.terms_.size()) return 0;
  return a.terms_.size() < b.terms_.size() ? -1 : 1;
}

namespace {

// A term's exponent prints without parentheses when the right-associative
// "w^" chain re-parses to the same thing: naturals and single coeff-1 towers.
bool exponent_needs_parens(const Ordinal& e) {
  if (e.is_nat()) return false;
  return e.terms().size() != 1 || e.terms()[0].coeff != 1;
}

void format_into(const Ordinal& o, std::string& out) {
  if (o.is_zero()) {
    out += "0";
    return;
  }
  bool first = true;
  for (const auto& t : o.terms()) {
    if (!first) out += " + ";
    first = false;
    if (t.exp.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += "w";
    if (!(t.exp.is_nat() && t.exp.nat_value() == 1)) {
      out += "^";
      if (exponent_needs_parens(t.exp)) {
        out += "(";
        format_into(t.exp, out);
        out += ")";
      } else {
        format_into(t.exp, out);
      }
    }
    if (t.coeff != 1) {
      out += "*";
      out += std::to_string(t.coeff);
    }
  }
}

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("ordinal parse error at position " +
                                std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }

  uint64_t nat() {
    skip_ws();
    if (!peek_digit()) fail("expected a natural number");
    uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      uint64_t d = static_cast<uint64_t>(s[pos] - '0');
      if (v > (UINT64_MAX - d) / 10) fail("natural number overflows");
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }

  // atom := "(" sum ")" | "w" ("^" atom)? | nat
  Ordinal atom() {
    skip_ws();
    if (eat('(')) {
      Ordinal o = sum();
      if (!eat(')')) fail("expected ')'");
      return o;
    }
    if (eat('w')) {
      if (eat('^')) return Ordinal::power(atom(), 1);
      return Ordinal::omega();
    }
    if (peek_digit()) return Ordinal::nat(nat());
    fail("expected '(', 'w', or a number");
  }

  // term := "w" ("^" atom)? ("*" nat)? | nat ; returns (exponent, coeff)
  Ordinal::Term term() {
    skip_ws();
    if (pos < s.size() && s[pos] == 'w') {
      ++pos;
      Ordinal exp = Ordinal::nat(1);
      if (eat('^')) exp = atom();
      uint64_t coeff = 1;
      if (eat('*')) {
        coeff = nat();
        if (coeff == 0) fail("coefficient must be >= 1");
      }
      return {exp, coeff};
    }
    if (peek_digit()) {
      uint64_t v = nat();
      if (v == 0) return {Ordinal(), 0};  // explicit zero, only valid alone
      return {Ordinal(), v};
    }
    fail("expected 'w' or a number");
  }

  Ordinal sum() {
    std::vector<Ordinal::Term> terms;
    size_t at = pos;
    Ordinal::Term t = term();
    if (t.coeff == 0) {
      // "0" stands alone; "0 + x" is not a normal form.
      skip_ws();
      if (eat('+')) {
        pos = at;
        fail("zero term in a sum");
      }
      return Ordinal();
    }
    terms.push_back(t);
    while (eat('+')) {
      size_t here = pos;
      Ordinal::Term next = term();
      if (next.coeff == 0) {
        pos = here;
        fail("zero term in a sum");
      }
      if (compare(next.exp, terms.back().exp) >= 0) {
        pos = here;
        fail("exponents must strictly decrease (not normal form)");
      }
      terms.push_back(next);
    }
    return Ordinal::from_terms(std::move(terms));
  }
};

}  // namespace

std::string Ordinal::str() const {
  std::string out;
  format_into(*this, out);
  return out;
}

Ordinal parse_ordinal(const std::string& text) {
  Parser p(text);
  Ordinal o = p.sum();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return o;
}

}  // namespace slab
