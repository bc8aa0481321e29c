#include "slab/report.hpp"

#include "slab/capacity.hpp"
#include "slab/ordinal.hpp"

namespace slab {

std::string rat_approx(const Rat& r) {
  // 6 decimal places, round to nearest, plain fixed-point text.
  Int scaled = (r.get_num() * 2000000) / r.get_den();
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  Int units = (scaled + 1) / 2;
  Int whole = units / 1000000;
  Int frac = units % 1000000;
  std::string f = frac.get_str();
  f.insert(0, 6 - f.size(), '0');
  return (neg ? "-" : "") + whole.get_str() + "." + f;
}

nlohmann::ordered_json SuiteReport::json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["config"] = config;
  j["pass"] = pass;
  if (has_ratio) {
    j["max_ratio"] = rat_json(max_ratio);
    j["max_ratio_approx"] = rat_approx(max_ratio);
  }
  j["witness"] = witness;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

nlohmann::ordered_json report_header(uint64_t master_seed) {
  const Capacity& c = capacity();
  nlohmann::ordered_json j;
  j["tool"] = "slab";
  j["version"] = tool_version();
  j["fundamental_sequence"] = fundamental_sequence_convention();
  j["capacity"] = {{"schreier_window", c.schreier_window},
                   {"zv_window", c.zv_window},
                   {"exact_arity", c.exact_arity},
                   {"tensor_window", c.tensor_window},
                   {"dual_set_size", c.dual_set_size}};
  j["master_seed"] = master_seed;
  return j;
}

}  // namespace slab
