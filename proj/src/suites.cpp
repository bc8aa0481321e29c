#include "slab/suites.hpp"

#include <stdexcept>

#include "slab/capacity.hpp"
#include "slab/estimates.hpp"
#include "slab/indices.hpp"
#include "slab/rng.hpp"
#include "slab/schreier.hpp"
#include "slab/spaces.hpp"
#include "slab/tensor.hpp"

namespace slab {

namespace {

std::vector<Ordinal> default_alphas() {
  return {Ordinal::nat(1), Ordinal::nat(2), Ordinal::omega()};
}

nlohmann::ordered_json alphas_json(const std::vector<Ordinal>& as) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& a : as) out.push_back(a.str());
  return out;
}

void set_witness(SuiteReport& rep, nlohmann::ordered_json w) {
  if (!rep.pass) return;  // keep the first violation
  rep.pass = false;
  rep.witness = std::move(w);
}

// Cross-checks, per sample:
//   - the norm evaluator (weight-table recursion) against a direct maximum
//     over the enumerated admissible sets of the window;
//   - the membership decision against three independent replays: the
//     all-ones weight table (max weight |F| iff F is a member), the
//     incremental cursor, and certificate search plus replay.
SuiteReport suite_oracle(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "ORACLE";
  const int samples = cfg.samples > 0 ? cfg.samples : 500;
  const auto alphas = cfg.alphas.empty() ? default_alphas() : cfg.alphas;
  const int window = 12;
  rep.config = {{"seed", cfg.seed},
                {"samples", samples},
                {"alphas", alphas_json(alphas)},
                {"window", window}};
  rep.pass = true;

  struct Level {
    SchreierFamily fam;
    SpacePtr space;
    std::vector<FinSet> admissible;
  };
  std::vector<Level> levels;
  for (const auto& a : alphas)
    levels.push_back({SchreierFamily(a), SpaceSpec::schreier(a),
                      enumerate_admissible(window, a, false)});

  for (int s = 0; s < samples; ++s) {
    Rng rng = sample_rng(cfg.seed, 70000 + static_cast<uint64_t>(s));
    const size_t ai = static_cast<size_t>(s) % alphas.size();
    const Level& lv = levels[ai];

    // Norm check on a random vector supported inside the window.
    RatVec x;
    for (int i = 1; i <= window; ++i)
      if (rng.flip())
        x.set(i, rat(rng.range(1, 8) * (rng.flip() ? 1 : -1),
                     rng.range(1, 8)));
    const Rat lib = norm(lv.space, x);
    Rat brute(0);
    for (const FinSet& e : lv.admissible) {
      Rat sum(0);
      for (int i : e.elems) sum += abs(x.at(i));
      if (sum > brute) brute = sum;
    }
    if (lib != brute)
      set_witness(rep, {{"check", "norm"},
                        {"alpha", alphas[ai].str()},
                        {"vector", x.json()},
                        {"recursive", rat_json(lib)},
                        {"enumerated", rat_json(brute)}});

    // Membership check on an independent random subset of the window.
    FinSet f;
    for (int i = 1; i <= window; ++i)
      if (rng.flip()) f.elems.push_back(i);
    const bool m = lv.fam.member(f);

    std::vector<Rat> ones(f.elems.size(), Rat(1));
    const bool by_weight =
        max_admissible_weight(alphas[ai], f.elems, ones) ==
        Rat(static_cast<long>(f.size()));

    MembershipCursor cur(lv.fam);
    for (int k : f.elems) cur.push(k);
    const bool by_cursor = cur.member();

    auto cert = lv.fam.partition_witness(f);
    const bool by_cert = cert != nullptr;
    const bool cert_replays =
        !cert || (validate_certificate(*cert, alphas[ai]) && cert->set == f);

    if (m != by_weight || m != by_cursor || m != by_cert || !cert_replays)
      set_witness(rep, {{"check", "membership"},
                        {"alpha", alphas[ai].str()},
                        {"set", f.json()},
                        {"member", m},
                        {"weight_table", by_weight},
                        {"cursor", by_cursor},
                        {"certificate", by_cert},
                        {"certificate_replays", cert_replays}});
  }

  if (rep.pass)
    rep.notes.push_back("norm and membership agree across all replay paths");
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "P31", "P24", "L211", "R212", "L213", "DERIV",
      "PR46", "P61", "L66",  "HRHO", "ORACLE"};
  return ids;
}

SuiteReport run_suite(const std::string& suite_id, const SuiteConfig& cfg) {
  if (suite_id == "P31" || suite_id == "P24" || suite_id == "L211" ||
      suite_id == "R212" || suite_id == "L213")
    return run_estimate_suite(suite_id, cfg);
  if (suite_id == "DERIV" || suite_id == "PR46" || suite_id == "HRHO")
    return run_index_suite(suite_id, cfg);
  if (suite_id == "P61" || suite_id == "L66")
    return run_tensor_suite(suite_id, cfg);
  if (suite_id == "ORACLE") return suite_oracle(cfg);
  std::string known;
  for (const auto& id : suite_ids()) known += (known.empty() ? "" : ", ") + id;
  throw std::invalid_argument("unknown suite id '" + suite_id +
                              "' (known: " + known + ")");
}

nlohmann::ordered_json AggregateReport::json() const {
  nlohmann::ordered_json j;
  j["header"] = report_header(master_seed);
  j["pass"] = pass;
  j["capacity_errors"] = capacity_errors;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : suites) arr.push_back(r.json());
  j["suites"] = arr;
  return j;
}

AggregateReport run_all(const SuiteConfig& cfg) {
  AggregateReport agg;
  agg.master_seed = cfg.seed;
  agg.pass = true;
  for (const std::string& id : suite_ids()) {
    try {
      agg.suites.push_back(run_suite(id, cfg));
    } catch (const CapacityError& e) {
      SuiteReport rep;
      rep.suite = id;
      rep.pass = false;
      rep.notes.push_back(std::string("capacity error: ") + e.what());
      agg.suites.push_back(std::move(rep));
      ++agg.capacity_errors;
    }
    if (!agg.suites.back().pass) agg.pass = false;
  }
  return agg;
}

}  // namespace slab
