// Batch command-line front end: family membership and enumeration, exact
// norms, domination constants, derivative and l1-certificate queries,
// injective tensor norms, and the verification suites.
//
// Exit codes: 0 success / suites pass, 1 suite violation (witness in the
// report), 2 usage or input error, 3 capacity limit hit.
//
// Reports are deterministic: the same arguments and input files produce the
// same bytes. JSON is the only format that carries witnesses; csv is a flat
// per-suite summary and only defined for verify.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "slab/capacity.hpp"
#include "slab/estimates.hpp"
#include "slab/indices.hpp"
#include "slab/ordinal.hpp"
#include "slab/schreier.hpp"
#include "slab/spaces.hpp"
#include "slab/suites.hpp"
#include "slab/tensor.hpp"

namespace {

using nlohmann::ordered_json;

struct Result {
  ordered_json report;                  // full json form
  std::vector<std::string> text_lines;  // --format text
  std::vector<std::string> csv_lines;   // --format csv (verify only)
  int exit_code = 0;
};

slab::Rat parse_rat_text(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return slab::Rat(slab::Int(s));
    slab::Int num(s.substr(0, slash));
    slab::Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    slab::Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s +
                                "' (expected p or p/q)");
  }
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: '" + csv + "'");
    }
    if (used != item.size())
      throw std::invalid_argument("not an integer list: '" + csv + "'");
    out.push_back(v);
  }
  return out;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path +
                                "': " + e.what());
  }
}

std::vector<slab::RatVec> load_vectors(const std::string& path) {
  nlohmann::json j = load_json_file(path);
  if (!j.is_array())
    throw std::invalid_argument("'" + path +
                                "' must hold an array of vectors");
  std::vector<slab::RatVec> out;
  for (const auto& item : j) out.push_back(slab::parse_ratvec(item));
  return out;
}

ordered_json run_json(const std::vector<std::string>& args) {
  ordered_json j;
  j["args"] = args;
  return j;
}

// The csv form deliberately drops witnesses; they only travel in JSON.
void suite_csv(Result& res, const slab::SuiteReport& rep) {
  if (res.csv_lines.empty())
    res.csv_lines.push_back(
        "suite,pass,max_ratio_num,max_ratio_den,max_ratio_approx");
  std::string row = rep.suite;
  row += rep.pass ? ",pass" : ",fail";
  if (rep.has_ratio) {
    row += "," + rep.max_ratio.get_num().get_str();
    row += "," + rep.max_ratio.get_den().get_str();
    row += "," + slab::rat_approx(rep.max_ratio);
  } else {
    row += ",,,";
  }
  res.csv_lines.push_back(row);
}

void suite_text(Result& res, const slab::SuiteReport& rep) {
  std::string line = rep.suite + ": " + (rep.pass ? "pass" : "FAIL");
  if (rep.has_ratio)
    line += "  (max ratio " + rep.max_ratio.get_str() + " ~ " +
            slab::rat_approx(rep.max_ratio) + ")";
  for (const auto& n : rep.notes) line += "\n  note: " + n;
  res.text_lines.push_back(line);
}

std::string rat_text(const slab::Rat& r) {
  return r.get_str() + " (~" + slab::rat_approx(r) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Schreier-family membership, norms, domination constants and "
      "verification suites"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "output format (default text)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "write the report to this file");

  Result res;
  std::vector<std::string> args(argv + 1, argv + argc);

  // ---- schreier ----
  auto* sch = app.add_subcommand("schreier", "family membership queries");
  sch->require_subcommand(1);

  std::string sm_alpha = "1", sm_set;
  auto* schm = sch->add_subcommand("member", "is the set in the family?");
  schm->add_option("--alpha", sm_alpha, "family level (ordinal, e.g. w^2)");
  schm->add_option("--set", sm_set, "comma-separated elements")->required();
  schm->callback([&] {
    slab::Ordinal a = slab::parse_ordinal(sm_alpha);
    slab::FinSet f(parse_int_list(sm_set));
    const bool m = slab::SchreierFamily(a).member(f);
    res.report["header"] = slab::report_header(1);
    res.report["run"] = run_json(args);
    res.report["alpha"] = a.str();
    res.report["set"] = f.json();
    res.report["member"] = m;
    res.text_lines.push_back(m ? "true" : "false");
  });

  std::string se_alpha = "1";
  int se_window = 0;
  bool se_maximal = false;
  auto* sche = sch->add_subcommand("enum", "all members inside [1..window]");
  sche->add_option("--alpha", se_alpha, "family level");
  sche->add_option("--window", se_window, "window size")->required();
  sche->add_flag("--maximal", se_maximal,
                 "keep only sets with no extension inside the window");
  sche->callback([&] {
    slab::Ordinal a = slab::parse_ordinal(se_alpha);
    auto sets = slab::enumerate_admissible(se_window, a, se_maximal);
    res.report["header"] = slab::report_header(1);
    res.report["run"] = run_json(args);
    res.report["alpha"] = a.str();
    res.report["window"] = se_window;
    res.report["only_maximal"] = se_maximal;
    res.report["count"] = sets.size();
    auto arr = ordered_json::array();
    for (const auto& f : sets) {
      arr.push_back(f.json());
      res.text_lines.push_back(f.str());
    }
    res.report["sets"] = arr;
  });

  // ---- norm ----
  std::string n_space, n_file;
  auto* nrm = app.add_subcommand("norm", "exact norm of a vector in a space");
  nrm->add_option("--space", n_space, "space expression")->required();
  nrm->add_option("--vector", n_file, "vector file (JSON triples)")
      ->required();
  nrm->callback([&] {
    slab::SpacePtr X = slab::parse_space(n_space);
    slab::RatVec x = slab::parse_ratvec(load_json_file(n_file));
    slab::Rat v = slab::norm(X, x);
    res.report["header"] = slab::report_header(1);
    res.report["run"] = run_json(args);
    res.report["space"] = X->str();
    res.report["vector"] = x.json();
    res.report["norm"] = slab::rat_json(v);
    res.report["norm_approx"] = slab::rat_approx(v);
    res.text_lines.push_back(rat_text(v));
  });

  // ---- estimate dominate ----
  std::string d_space, d_refspace, d_file, d_refs, d_mode = "exact";
  uint64_t d_seed = 1;
  auto* est = app.add_subcommand("estimate", "domination constants");
  est->require_subcommand(1);
  auto* dom = est->add_subcommand(
      "dominate", "least C with |sum a x_n| <= C |sum a e_ref| for all a");
  dom->add_option("--space", d_space, "space of the vectors")->required();
  dom->add_option("--vectors", d_file, "vector list file (JSON)")->required();
  dom->add_option("--refs", d_refs, "reference indices, comma-separated")
      ->required();
  dom->add_option("--refspace", d_refspace,
                  "reference space (defaults to --space)");
  dom->add_option("--mode", d_mode, "exact|sample (default exact)")
      ->check(CLI::IsMember({"exact", "sample"}));
  dom->add_option("--seed", d_seed, "sampling seed");
  dom->callback([&] {
    slab::SpacePtr X = slab::parse_space(d_space);
    slab::SpacePtr V =
        d_refspace.empty() ? X : slab::parse_space(d_refspace);
    auto xs = load_vectors(d_file);
    auto refs = parse_int_list(d_refs);
    auto mode = d_mode == "exact" ? slab::DominationMode::Exact
                                  : slab::DominationMode::Sampled;
    slab::DominationReport dr =
        slab::domination_constant(xs, X, refs, V, mode, d_seed);
    res.report["header"] = slab::report_header(d_seed);
    res.report["run"] = run_json(args);
    res.report["space"] = X->str();
    res.report["ref_space"] = V->str();
    res.report["refs"] = refs;
    res.report["report"] = dr.json();
    if (dr.exact)
      res.text_lines.push_back("C = " + rat_text(dr.lower_bound));
    else
      res.text_lines.push_back("C >= " + rat_text(dr.lower_bound) +
                               "  (sampled, upper bound unverified)");
  });

  // ---- verify ----
  std::string v_id;
  uint64_t v_seed = 1;
  int v_samples = 0;
  std::vector<std::string> v_alphas;
  std::string v_bound, v_space;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("id", v_id, "suite id or 'all'")->required();
  ver->add_option("--seed", v_seed, "master seed (default 1)");
  ver->add_option("--samples", v_samples, "sample count (0 = suite default)");
  ver->add_option("--alpha", v_alphas, "family level, repeatable");
  ver->add_option("--bound", v_bound,
                  "override the proved constant (demonstrates refutation)");
  ver->add_option("--space", v_space, "reference-space override (L211/L213)");
  ver->callback([&] {
    slab::SuiteConfig cfg;
    cfg.seed = v_seed;
    cfg.samples = v_samples;
    for (const auto& s : v_alphas) cfg.alphas.push_back(slab::parse_ordinal(s));
    if (!v_bound.empty()) cfg.bound_override = parse_rat_text(v_bound);
    cfg.space_override = v_space;

    res.report["header"] = slab::report_header(cfg.seed);
    res.report["run"] = run_json(args);
    std::vector<slab::SuiteReport> reports;
    bool pass = true;
    int capacity_errors = 0;
    if (v_id == "all") {
      slab::AggregateReport agg = slab::run_all(cfg);
      reports = std::move(agg.suites);
      pass = agg.pass;
      capacity_errors = agg.capacity_errors;
    } else {
      reports.push_back(slab::run_suite(v_id, cfg));
      pass = reports.front().pass;
    }
    res.report["pass"] = pass;
    res.report["capacity_errors"] = capacity_errors;
    auto arr = ordered_json::array();
    for (const auto& r : reports) {
      arr.push_back(r.json());
      suite_text(res, r);
      suite_csv(res, r);
    }
    res.report["suites"] = arr;
    res.text_lines.push_back(std::string("aggregate: ") +
                             (pass ? "pass" : "FAIL"));
    res.exit_code = pass ? 0 : 1;
  });

  // ---- index ----
  auto* idx = app.add_subcommand("index", "derivative and certificate queries");
  idx->require_subcommand(1);

  std::string id_alpha = "1", id_set;
  int id_stages = 1, id_horizon = 200;
  auto* idd = idx->add_subcommand(
      "derive", "is the set in the k-th derivative of the family?");
  idd->add_option("--alpha", id_alpha, "family level");
  idd->add_option("--set", id_set, "comma-separated elements (may be empty)");
  idd->add_option("--stages", id_stages, "derivative stages (default 1)");
  idd->add_option("--horizon", id_horizon,
                  "first-element search bound for the empty set");
  idd->callback([&] {
    slab::Ordinal a = slab::parse_ordinal(id_alpha);
    slab::FinSet f(parse_int_list(id_set));
    auto fam = slab::FamilyOracle::schreier(a);
    auto ans = slab::derivative_member(f, fam, id_stages, id_horizon);
    res.report["header"] = slab::report_header(1);
    res.report["run"] = run_json(args);
    res.report["alpha"] = a.str();
    res.report["set"] = f.json();
    res.report["stages"] = id_stages;
    res.report["horizon"] = id_horizon;
    res.report["member"] = ans.member;
    res.report["exact"] = ans.exact;
    res.text_lines.push_back(std::string(ans.member ? "true" : "false") +
                             (ans.exact ? "" : "  (horizon-limited)"));
  });

  std::string ih_space, ih_file, ih_rho = "1";
  auto* idh = idx->add_subcommand(
      "hrho", "exact min over the simplex of the combined norm");
  idh->add_option("--space", ih_space, "space expression")->required();
  idh->add_option("--vectors", ih_file, "normalized vector list (JSON)")
      ->required();
  idh->add_option("--rho", ih_rho, "threshold (rational)");
  idh->callback([&] {
    slab::SpacePtr X = slab::parse_space(ih_space);
    auto xs = load_vectors(ih_file);
    slab::Rat rho = parse_rat_text(ih_rho);
    slab::L1LowerCertificate cert = slab::h_rho_member(xs, X, rho);
    res.report["header"] = slab::report_header(1);
    res.report["run"] = run_json(args);
    res.report["space"] = X->str();
    res.report["certificate"] = cert.json();
    res.text_lines.push_back(
        std::string("member: ") + (cert.member ? "true" : "false") +
        ", min over simplex = " + rat_text(cert.min_value));
  });

  // ---- tensor ----
  std::string t_file;
  auto* ten = app.add_subcommand("tensor", "injective tensor norms");
  ten->require_subcommand(1);
  auto* tnn = ten->add_subcommand("norm", "injective norm of a matrix");
  tnn->add_option("--file", t_file, "matrix file (JSON)")->required();
  tnn->callback([&] {
    slab::TensorOp u = slab::TensorOp::parse(load_json_file(t_file));
    slab::Rat v = slab::injective_norm(u);
    res.report["header"] = slab::report_header(1);
    res.report["run"] = run_json(args);
    res.report["e_space"] = u.e_space->str();
    res.report["f_space"] = u.f_space->str();
    res.report["norm"] = slab::rat_json(v);
    res.report["norm_approx"] = slab::rat_approx(v);
    res.text_lines.push_back(rat_text(v));
  });

  // --format / --out live on the root but may be written after the
  // subcommand, as in `verify P31 --out report.json`
  std::function<void(CLI::App*)> fall = [&fall](CLI::App* a) {
    for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; })) {
      s->fallthrough();
      fall(s);
    }
  };
  fall(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // help text
    app.exit(e);
    return 2;
  } catch (const slab::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string payload;
  if (format == "json") {
    payload = res.report.dump(2) + "\n";
  } else if (format == "csv") {
    if (res.csv_lines.empty()) {
      std::cerr << "error: csv output is only defined for verify summaries\n";
      return 2;
    }
    for (const auto& l : res.csv_lines) payload += l + "\n";
  } else {
    for (const auto& l : res.text_lines) payload += l + "\n";
  }

  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << payload;
  }
  return res.exit_code;
}
