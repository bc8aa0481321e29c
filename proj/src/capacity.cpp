#include "slab/capacity.hpp"

#include <cstdlib>

namespace slab {

namespace {

int env_int(const char* name, int fallback, int hard_ceiling) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long parsed = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || parsed < 1)
    throw CapacityError(std::string(name) + " must be a positive integer, got '" +
                        v + "'");
  if (parsed > hard_ceiling)
    throw CapacityError(std::string(name) + "=" + std::to_string(parsed) +
                        " exceeds hard ceiling " + std::to_string(hard_ceiling) +
                        " (exponential cost)");
  return static_cast<int>(parsed);
}

Capacity load() {
  Capacity c;
  c.schreier_window = env_int("SLAB_SCHREIER_WINDOW", c.schreier_window, 32);
  c.zv_window = env_int("SLAB_ZV_WINDOW", c.zv_window, 24);
  c.exact_arity = env_int("SLAB_EXACT_ARITY", c.exact_arity, 8);
  c.tensor_window = env_int("SLAB_TENSOR_WINDOW", c.tensor_window, 12);
  c.dual_set_size = env_int("SLAB_DUAL_SET_SIZE", c.dual_set_size, 12);
  return c;
}

}  // namespace

Capacity& capacity() {
  static Capacity c = load();
  return c;
}

std::string capacity_summary() {
  const Capacity& c = capacity();
  return "schreier_window=" + std::to_string(c.schreier_window) +
         " zv_window=" + std::to_string(c.zv_window) +
         " exact_arity=" + std::to_string(c.exact_arity) +
         " tensor_window=" + std::to_string(c.tensor_window) +
         " dual_set_size=" + std::to_string(c.dual_set_size);
}

}  // namespace slab
