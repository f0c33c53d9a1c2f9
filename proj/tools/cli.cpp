#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fplab/checks.hpp"
#include "fplab/constructions.hpp"
#include "fplab/counting.hpp"
#include "fplab/decomposition.hpp"
#include "fplab/errors.hpp"
#include "fplab/limits.hpp"
#include "fplab/linear_system.hpp"
#include "fplab/multilinear.hpp"
#include "fplab/polynomial.hpp"
#include "fplab/rational.hpp"
#include "fplab/system_analysis.hpp"
#include "fplab/table_io.hpp"
#include "fplab/uniformity.hpp"
#include "fplab/version.hpp"

namespace fplab {
namespace {

using ordered_json = nlohmann::ordered_json;

// Bad flag values discovered after parsing. Maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::int32_t p = 0;  // 0 until set
  int n = 0;
  std::uint64_t budget = 200'000'000;
  std::uint64_t seed = 1;
  std::string format = "json";
  int threads = 0;  // 0 means hardware concurrency
};

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t q = 3; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require_p(const RunConfig& cfg) {
  if (cfg.p == 0) throw UsageError("-p/--prime is required for this command");
}

void require_n(const RunConfig& cfg) {
  if (cfg.n == 0) throw UsageError("-n/--vars is required for this command");
}

ordered_json config_json(const RunConfig& cfg) {
  return ordered_json{{"p", cfg.p},       {"n", cfg.n},
                      {"budget", cfg.budget}, {"seed", cfg.seed},
                      {"format", cfg.format}, {"threads", cfg.threads}};
}

ordered_json rational_json(const Rational& r) {
  return ordered_json{
      {"num", r.num()}, {"den", r.den()}, {"value", r.to_double()}};
}

ordered_json complex_json(std::complex<double> z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json optional_int(const std::optional<int>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json count_json(const CountReport& rep) {
  ordered_json j;
  j["average"] = complex_json(rep.average);
  if (rep.exact_real_average) {
    j["exact_real_average"] = rational_json(*rep.exact_real_average);
  }
  if (rep.residue_histogram) {
    j["residue_histogram"] =
        ordered_json{{"counts", rep.residue_histogram->counts()},
                     {"total", rep.residue_histogram->total()}};
  }
  if (rep.density) j["density"] = rational_json(*rep.density);
  if (rep.expected_product) {
    j["expected_product"] = rational_json(*rep.expected_product);
  }
  if (rep.deviation) j["deviation"] = rational_json(*rep.deviation);
  j["method"] = rep.method;
  j["cost"] = rep.cost;
  return j;
}

void flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
              rows);
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) flatten(v, prefix + "." + std::to_string(i++), rows);
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

// One record in the configured format. CSV gets a column-name row before the
// first record; every record of a run flattens to the same keys.
void emit(const RunConfig& cfg, const ordered_json& record, std::ostream& out,
          bool compact, bool* csv_header_done) {
  if (cfg.format == "json") {
    out << (compact ? record.dump() : record.dump(2)) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(record, "", rows);
  if (cfg.format == "csv") {
    if (csv_header_done == nullptr || !*csv_header_done) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out << rows[i].first << (i + 1 < rows.size() ? "," : "\n");
      }
      if (csv_header_done != nullptr) *csv_header_done = true;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << rows[i].second << (i + 1 < rows.size() ? "," : "\n");
    }
    return;
  }
  for (const auto& [key, value] : rows) out << key << " = " << value << '\n';
  out << '\n';
}

ordered_json wrap(const RunConfig& cfg, const std::string& command,
                  ordered_json payload, std::uint64_t used_before) {
  ordered_json j;
  j["version"] = kVersion;
  j["config"] = config_json(cfg);
  j["cost"] = limits().used - used_before;
  j["command"] = command;
  j["report"] = std::move(payload);
  return j;
}

ordered_json run_unorm(const RunConfig& cfg, const std::string& spec, int k) {
  require_p(cfg);
  require_n(cfg);
  const TableFunction f = load_function(spec, cfg.p, cfg.n);
  const UniformityReport rep = gowers_norm(f, k);
  std::optional<Rational> exact = rep.exact_power;
  if (!exact && spec.rfind("poly:", 0) == 0) {
    const Polynomial pi = parse_polynomial(spec.substr(5), cfg.p, cfg.n);
    if (k >= std::max(1, pi.degree())) {
      exact = exact_phase_unorm_power(pi, k);
    }
  }
  ordered_json j{{"function", spec}, {"k", rep.k}, {"value", rep.value}};
  j["exact_power"] = exact ? rational_json(*exact) : ordered_json(nullptr);
  j["cost"] = rep.cost;
  return j;
}

ordered_json run_rank(const RunConfig& cfg, const std::string& text) {
  require_p(cfg);
  require_n(cfg);
  const Polynomial pi = parse_polynomial(text, cfg.p, cfg.n);
  const int d = std::max(1, pi.degree());
  const RankValue rv = analytic_rank(MultilinearForm::derived_from(pi, d));
  ordered_json j{{"polynomial", pi.to_string()},
                 {"degree", pi.degree()},
                 {"arity", d},
                 {"kernel_count", rv.kernel_count},
                 {"domain_size", rv.domain_size},
                 {"alpha", rational_json(rv.alpha())}};
  j["rank"] = rv.rank_infinite() ? ordered_json(nullptr)
                                 : ordered_json(rv.rank());
  j["infinite"] = rv.rank_infinite();
  j["exact"] = rv.is_exact;
  return j;
}

ordered_json run_analyze(const RunConfig& cfg, const std::string& path,
                         int smax) {
  require_p(cfg);
  const LinearSystem system = parse_system(read_file(path), cfg.p);
  const int cap = smax > 0 ? smax : cfg.p - 1;
  const SystemAnalysis a = analyze_system(system, cap);
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : a.verdicts) {
    verdicts.push_back(ordered_json{{"s", v.s},
                                    {"independent", v.independent},
                                    {"rank", v.rank},
                                    {"row_independent", v.row_independent},
                                    {"row_relations", v.row_relations}});
  }
  ordered_json j{{"system", path},
                 {"p", a.p},
                 {"d", a.d},
                 {"m", a.m},
                 {"s_star", optional_int(a.s_star)},
                 {"predicted_true_complexity",
                  optional_int(a.predicted_true_complexity)},
                 {"cs_complexity", optional_int(a.cs.value)},
                 {"cs_degenerate", a.cs.degenerate},
                 {"degenerate", a.degenerate},
                 {"degeneracy_notes", a.degeneracy_notes},
                 {"truncated", a.truncated}};
  j["verdicts"] = std::move(verdicts);
  return j;
}

ordered_json run_count(const RunConfig& cfg, const std::string& path,
                       const std::vector<std::string>& fn_specs,
                       std::vector<std::string> set_specs) {
  require_p(cfg);
  require_n(cfg);
  if (!fn_specs.empty() && !set_specs.empty()) {
    throw UsageError("-F and -A are mutually exclusive");
  }
  if (fn_specs.empty() && set_specs.empty()) {
    throw UsageError("-F or -A is required");
  }
  const LinearSystem system = parse_system(read_file(path), cfg.p);
  ordered_json j{{"system", path}, {"forms", system.m()}};
  if (!set_specs.empty()) {
    if (set_specs.size() == 1 && system.m() > 1) {
      set_specs.assign(static_cast<std::size_t>(system.m()), set_specs[0]);
    }
    std::vector<TableFunction> indicators;
    for (const auto& s : set_specs) {
      indicators.push_back(load_indicator(s, cfg.p, cfg.n));
    }
    j["sets"] = set_specs;
    j.update(count_json(set_solution_density(indicators, system)));
    return j;
  }
  j["functions"] = fn_specs;
  const bool all_phases =
      std::all_of(fn_specs.begin(), fn_specs.end(), [](const std::string& s) {
        return s.rfind("poly:", 0) == 0;
      });
  if (all_phases) {
    std::vector<Polynomial> phases;
    for (const auto& s : fn_specs) {
      phases.push_back(parse_polynomial(s.substr(5), cfg.p, cfg.n));
    }
    j.update(count_json(phase_system_average(phases, system)));
  } else {
    std::vector<TableFunction> functions;
    for (const auto& s : fn_specs) {
      functions.push_back(load_function(s, cfg.p, cfg.n));
    }
    j.update(count_json(system_average(functions, system)));
  }
  return j;
}

ordered_json run_example(const RunConfig& cfg, const std::string& path,
                         const std::vector<int>& degrees) {
  require_p(cfg);
  require_n(cfg);
  const LinearSystem system = parse_system(read_file(path), cfg.p);
  const OffDiagonalWitness w =
      offdiagonal_example(system, degrees, cfg.n, cfg.seed);
  ordered_json relations = ordered_json::array();
  for (int i = 0; i < w.relations.rows(); ++i) {
    relations.push_back(w.relations.row(i));
  }
  ordered_json exponents = ordered_json::array();
  for (const auto& pi : w.exponents) exponents.push_back(pi.to_string());
  ordered_json norms = ordered_json::array();
  for (const auto& norm : w.norms) {
    ordered_json nj{{"form", norm.i}, {"order", norm.s},
                    {"u_norm", norm.u_norm}};
    nj["exact_power"] = norm.exact_power ? rational_json(*norm.exact_power)
                                         : ordered_json(nullptr);
    norms.push_back(std::move(nj));
  }
  ordered_json j{{"system", path},
                 {"degrees", w.degrees},
                 {"seed", w.seed},
                 {"draws", w.draws},
                 {"multipliers", w.multipliers}};
  j["relations"] = std::move(relations);
  j["exponents"] = std::move(exponents);
  j["certification"] = count_json(w.certification);
  j["norms"] = std::move(norms);
  return j;
}

ordered_json run_filter(const RunConfig& cfg, const std::string& json_path,
                        double epsilon, double R, double M_flag,
                        const std::string& out_prefix) {
  require_p(cfg);
  require_n(cfg);
  const Decomposition dec = load_decomposition(json_path, cfg.p, cfg.n);
  const double M =
      M_flag > 0 ? M_flag
                 : dec.declared_weight.value_or(dec.structured.weight());
  const FilterReport rep =
      rank_gap_filter(dec.f, dec.structured, dec.g, dec.h, epsilon, M, R);
  ordered_json bounds = ordered_json::array();
  for (const auto& b : rep.bounds) {
    bounds.push_back(ordered_json{
        {"name", b.name}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"pass", b.pass}});
  }
  ordered_json kept = ordered_json::array();
  for (const auto& term : rep.filtered.structured.terms()) {
    ordered_json tj{{"lambda", term.lambda},
                    {"polynomial", term.pi.to_string()}};
    tj["rank"] = term.rank ? ordered_json(*term.rank) : ordered_json(nullptr);
    kept.push_back(std::move(tj));
  }
  ordered_json j{{"decomposition", json_path},
                 {"epsilon", epsilon},
                 {"M", M},
                 {"R", R},
                 {"t", rep.t},
                 {"r1", rep.r1},
                 {"window_weight", rep.window_weight},
                 {"low_weight", rep.low_weight},
                 {"kept_weight", rep.kept_weight},
                 {"low_l2", rep.low_l2},
                 {"h_out_l2", rep.h_out_l2},
                 {"f_unorm", rep.f_unorm},
                 {"eta", rep.eta},
                 {"realized", rep.realized},
                 {"precondition_met", rep.precondition_met},
                 {"h_out_within_5eps", rep.h_out_within_5eps},
                 {"ranks", rep.ranks}};
  j["bounds"] = std::move(bounds);
  j["filtered"] = ordered_json{{"terms", std::move(kept)},
                               {"s", rep.filtered.s},
                               {"k", rep.filtered.k},
                               {"epsilon", rep.filtered.epsilon},
                               {"eta", rep.filtered.eta},
                               {"R", rep.filtered.R}};
  if (!out_prefix.empty()) {
    save_decomposition(rep.filtered, out_prefix + ".json", out_prefix);
    j["saved"] = out_prefix + ".json";
  }
  return j;
}

ordered_json run_search(const RunConfig& cfg, const std::string& spec, int d,
                        bool exhaustive, std::uint64_t samples) {
  require_p(cfg);
  require_n(cfg);
  const TableFunction f = load_function(spec, cfg.p, cfg.n);
  const InverseSearchResult res =
      samples > 0 && !exhaustive
          ? inverse_search_sampled(f, d, samples, cfg.seed)
          : inverse_search_exhaustive(f, d);
  ordered_json j{{"function", spec},
                 {"degree", d},
                 {"best", res.best.to_string()}};
  j["correlation"] = complex_json(res.correlation);
  j["correlation_abs"] = std::abs(res.correlation);
  j["candidates"] = res.candidates;
  j["exhaustive"] = res.exhaustive;
  j["seed"] = res.seed;
  return j;
}

int run_verify(const RunConfig& cfg, const std::string& suite,
               const std::string& check, std::ostream& out) {
  std::vector<PlannedCheck> plan = suite_plan(suite, cfg.seed);
  if (!check.empty()) {
    const auto& ids = check_ids();
    if (std::find(ids.begin(), ids.end(), check) == ids.end()) {
      throw UsageError("--check: unknown check id '" + check + "'");
    }
    std::erase_if(plan,
                  [&](const PlannedCheck& pc) { return pc.id != check; });
  }
  if (cfg.p != 0) {
    std::erase_if(plan,
                  [&](const PlannedCheck& pc) { return pc.fixture.p != cfg.p; });
  }
  if (plan.empty()) {
    throw UsageError("--check/--prime selected no fixtures");
  }
  int failures = 0;
  bool csv_header_done = false;
  for (const auto& planned : plan) {
    const CheckResult r = run_check(planned.id, planned.fixture);
    if (!r.pass) ++failures;
    if (cfg.format == "text") {
      out << (r.pass ? "PASS " : "FAIL ") << r.id << " p=" << r.fixture.p
          << " n=" << r.fixture.n << " d=" << r.fixture.d
          << " seed=" << r.fixture.seed << " lhs=" << r.lhs
          << " rhs=" << r.rhs;
      if (!r.note.empty()) out << " (" << r.note << ")";
      out << '\n';
      continue;
    }
    ordered_json j{{"version", kVersion},
                   {"config", config_json(cfg)},
                   {"cost", r.cost},
                   {"id", r.id},
                   {"fixture",
                    ordered_json{{"p", r.fixture.p},
                                 {"n", r.fixture.n},
                                 {"d", r.fixture.d},
                                 {"seed", r.fixture.seed}}},
                   {"pass", r.pass},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"relation", r.relation},
                   {"tolerance", r.tolerance},
                   {"note", r.note}};
    emit(cfg, j, out, /*compact=*/true, &csv_header_done);
  }
  return failures == 0 ? 0 : 4;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact uniformity, rank, and counting toolkit over F_p^n"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("-p,--prime", cfg.p, "field characteristic, an odd prime");
  app.add_option("-n,--vars", cfg.n, "number of variables");
  app.add_option("--budget", cfg.budget,
                 "largest per-operation point count permitted")
      ->envname("FPLAB_BUDGET");
  app.add_option("--seed", cfg.seed, "seed for randomized operations");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", cfg.threads, "worker threads, 0 for hardware")
      ->envname("FPLAB_THREADS");

  std::string unorm_spec;
  int unorm_k = 1;
  auto* unorm = app.add_subcommand("unorm", "uniformity norm of a function");
  unorm->fallthrough();
  unorm->add_option("-f,--function", unorm_spec,
                    "table path, poly:, or indicator: spec")
      ->required();
  unorm->add_option("-k,--order", unorm_k, "norm order")
      ->required()
      ->check(CLI::PositiveNumber);

  std::string rank_poly;
  auto* rank = app.add_subcommand(
      "rank", "kernel density and rank of a polynomial's derived form");
  rank->fallthrough();
  rank->add_option("-P,--polynomial", rank_poly, "polynomial text")
      ->required();

  std::string analyze_path;
  int analyze_smax = 0;
  auto* analyze =
      app.add_subcommand("analyze", "independence degrees of a linear system");
  analyze->fallthrough();
  analyze->add_option("-S,--system", analyze_path, "system file")->required();
  analyze->add_option("--smax", analyze_smax,
                      "largest degree scanned, default p-1");

  std::string count_path;
  std::vector<std::string> count_fns;
  std::vector<std::string> count_sets;
  auto* count =
      app.add_subcommand("count", "solution-weighted averages over a system");
  count->fallthrough();
  count->add_option("-S,--system", count_path, "system file")->required();
  count->add_option("-F,--function", count_fns,
                    "one function spec per form (repeatable)");
  count->add_option("-A,--set", count_sets,
                    "indicator spec per form; one spec serves all forms");

  std::vector<int> example_degrees;
  std::string example_path;
  auto* example = app.add_subcommand("example", "constructive examples");
  example->fallthrough();
  example->require_subcommand(1);
  auto* offdiag = example->add_subcommand(
      "offdiag", "product average 1 from small-norm phases");
  offdiag->fallthrough();
  offdiag->add_option("-S,--system", example_path, "system file")->required();
  offdiag->add_option("--degrees", example_degrees, "norm order per form")
      ->required()
      ->delimiter(',');

  std::string filter_json;
  double filter_eps = 0.0;
  double filter_R = 0.0;
  double filter_M = 0.0;
  std::string filter_out;
  auto* filter = app.add_subcommand(
      "filter", "drop low-rank terms of a stored decomposition");
  filter->fallthrough();
  filter->add_option("--decomposition", filter_json, "decomposition JSON file")
      ->required();
  filter->add_option("--epsilon", filter_eps, "uniformity target")
      ->required()
      ->check(CLI::PositiveNumber);
  filter->add_option("--R", filter_R, "rank threshold")->required();
  filter->add_option("--M", filter_M,
                     "weight cap, default the stored declared weight");
  filter->add_option("--out", filter_out,
                     "prefix for saving the filtered decomposition");

  std::string verify_suite = "core";
  std::string verify_check;
  auto* verify =
      app.add_subcommand("verify", "run identity and bound checks");
  verify->fallthrough();
  verify->add_option("--suite", verify_suite, "suite name");
  verify->add_option("--check", verify_check, "run a single check id");

  std::string search_spec;
  int search_d = 1;
  bool search_exhaustive = false;
  std::uint64_t search_samples = 0;
  auto* search = app.add_subcommand(
      "search-inverse", "best-correlated polynomial phase up to a degree");
  search->fallthrough();
  search->add_option("-f,--function", search_spec, "function spec")
      ->required();
  search->add_option("-d,--degree", search_d, "degree cap")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* exh_flag = search->add_flag("--exhaustive", search_exhaustive,
                                    "enumerate every canonical polynomial");
  search->add_option("--samples", search_samples, "seeded sample count")
      ->excludes(exh_flag);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cfg.p != 0 && !is_odd_prime(cfg.p)) {
      throw UsageError("-p/--prime must be an odd prime, got " +
                       std::to_string(cfg.p));
    }
    if (cfg.n < 0) throw UsageError("-n/--vars must be nonnegative");
    if (cfg.budget == 0) throw UsageError("--budget must be positive");
    if (cfg.threads < 0) throw UsageError("--threads must be nonnegative");
    limits().point_budget = cfg.budget;
    limits().threads = cfg.threads;
    const std::uint64_t used_before = limits().used;

    if (app.got_subcommand(verify)) {
      return run_verify(cfg, verify_suite, verify_check, out);
    }
    ordered_json payload;
    std::string command;
    if (app.got_subcommand(unorm)) {
      command = "unorm";
      payload = run_unorm(cfg, unorm_spec, unorm_k);
    } else if (app.got_subcommand(rank)) {
      command = "rank";
      payload = run_rank(cfg, rank_poly);
    } else if (app.got_subcommand(analyze)) {
      command = "analyze";
      payload = run_analyze(cfg, analyze_path, analyze_smax);
    } else if (app.got_subcommand(count)) {
      command = "count";
      payload = run_count(cfg, count_path, count_fns, count_sets);
    } else if (app.got_subcommand(example)) {
      command = "example offdiag";
      payload = run_example(cfg, example_path, example_degrees);
    } else if (app.got_subcommand(filter)) {
      command = "filter";
      payload = run_filter(cfg, filter_json, filter_eps, filter_R, filter_M,
                           filter_out);
    } else if (app.got_subcommand(search)) {
      command = "search-inverse";
      payload = run_search(cfg, search_spec, search_d, search_exhaustive,
                           search_samples);
    }
    emit(cfg, wrap(cfg, command, std::move(payload), used_before), out,
         /*compact=*/false, nullptr);
    return 0;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return 1;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return 2;
  } catch (const ContractError& e) {
    err << "contract: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace fplab
