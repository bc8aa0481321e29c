#pragma once

// Finite subsets of {1, 2, 3, ...} kept as strictly increasing vectors.
// Conventions used throughout: min(empty) = +infinity, max(empty) = 0, and
// "E <= F" / "n <= F" compare against min F, so every statement about the
// empty set resolves the way the family recursion expects.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace slab {

struct FinSet {
  std::vector<int> elems;  // strictly increasing, all >= 1

  FinSet() = default;
  explicit FinSet(std::vector<int> v) : elems(std::move(v)) { validate(); }
  FinSet(std::initializer_list<int> v) : elems(v) { validate(); }

  void validate() const {
    for (size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] < 1)
        throw std::invalid_argument("set elements must be positive");
      if (i > 0 && elems[i] <= elems[i - 1])
        throw std::invalid_argument("set elements must strictly increase");
    }
  }

  bool empty() const { return elems.empty(); }
  int size() const { return static_cast<int>(elems.size()); }

  // min(empty) = +infinity in spirit; INT_MAX is big enough for any window.
  int min_or_inf() const {
    return elems.empty() ? std::numeric_limits<int>::max() : elems.front();
  }
  int max_or_zero() const { return elems.empty() ? 0 : elems.back(); }

  FinSet with(int k) const {
    if (k <= max_or_zero())
      throw std::invalid_argument("extension element must exceed max");
    FinSet out = *this;
    out.elems.push_back(k);
    return out;
  }

  bool operator==(const FinSet& o) const { return elems == o.elems; }
  bool operator<(const FinSet& o) const { return elems < o.elems; }

  std::string str() const {
    std::string s = "{";
    for (size_t i = 0; i < elems.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(elems[i]);
    }
    return s + "}";
  }

  nlohmann::ordered_json json() const {
    return nlohmann::ordered_json(elems);
  }
};

// "2,3,6" -> {2,3,6}; "" -> empty set. Rejects junk with a diagnostic.
FinSet parse_finset(const std::string& text);

}  // namespace slab
