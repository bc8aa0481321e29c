#pragma once

// Enumeration capacities. Everything in the library is exact and exponential
// somewhere, so each oracle carries an explicit ceiling and refuses work
// beyond it instead of silently truncating.

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace slab {

struct Capacity {
  int schreier_window = 22;   // admissible-set enumeration / norm support
  int zv_window = 18;         // breakpoint-tuple enumeration span
  int exact_arity = 6;        // vertex enumeration / exact LP variable count
  int tensor_window = 10;     // per-side support of a tensor operator
  int dual_set_size = 8;      // sign patterns enumerated per admissible set
};

class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Reads SLAB_SCHREIER_WINDOW etc. once; the CLI echoes the effective values
// into every report so a run is reproducible from the report alone.
Capacity& capacity();

std::string capacity_summary();

inline void require_window(int n, int bound, const char* what) {
  if (n > bound)
    throw CapacityError(std::string(what) + " window " + std::to_string(n) +
                        " exceeds capacity " + std::to_string(bound));
  if (n < 0) throw CapacityError(std::string(what) + " window negative");
}

}  // namespace slab
