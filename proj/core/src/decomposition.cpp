#include "fplab/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "fplab/errors.hpp"
#include "fplab/multilinear.hpp"
#include "fplab/phase.hpp"
#include "fplab/table_io.hpp"
#include "fplab/uniformity.hpp"

namespace fplab {

void PhaseCombination::add_term(double lambda, Polynomial pi) {
  if (pi.p() != p_ || pi.n() != n_) {
    throw ContractError("term polynomial domain mismatch");
  }
  terms_.push_back(PhaseTerm{lambda, std::move(pi), std::nullopt});
}

double PhaseCombination::weight() const {
  double m = 0.0;
  for (const auto& t : terms_) m += std::abs(t.lambda);
  return m;
}

int PhaseCombination::degree() const {
  int d = 1;
  for (const auto& t : terms_) d = std::max(d, t.pi.degree());
  return d;
}

void PhaseCombination::rank_all() {
  for (auto& t : terms_) {
    if (t.rank) continue;
    const int d = std::max(1, t.pi.degree());
    t.rank = analytic_rank(MultilinearForm::derived_from(t.pi, d)).rank();
  }
}

TableFunction PhaseCombination::materialize() const {
  TableFunction out(p_, n_);
  for (const auto& t : terms_) {
    out = out.plus(phase_table(t.pi).scaled(t.lambda));
  }
  return out;
}

namespace {

double max_pointwise_gap(const TableFunction& a, const TableFunction& b) {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

TableFunction materialize_subset(const PhaseCombination& combination,
                                 const std::vector<std::size_t>& indices) {
  TableFunction out(combination.p(), combination.n());
  for (const auto i : indices) {
    const auto& t = combination.terms()[i];
    out = out.plus(phase_table(t.pi).scaled(t.lambda));
  }
  return out;
}

}  // namespace

FilterReport rank_gap_filter(const TableFunction& f,
                             const PhaseCombination& combination,
                             const TableFunction& g, const TableFunction& h,
                             double epsilon, double M, double R) {
  const std::int32_t p = combination.p();
  const int n = combination.n();
  if (f.p() != p || f.n() != n || g.p() != p || g.n() != n || h.p() != p ||
      h.n() != n) {
    throw ContractError("decomposition parts live on different domains");
  }
  if (epsilon <= 0.0 || M <= 0.0) {
    throw ContractError("epsilon and M must be positive");
  }

  PhaseCombination ranked = combination;
  ranked.rank_all();
  const int m = ranked.degree();

  const TableFunction structured = ranked.materialize();
  const double recon_gap =
      max_pointwise_gap(f, structured.plus(g).plus(h));
  if (recon_gap > 1e-9) {
    throw ContractError("precondition violated: parts do not sum to f (gap " +
                        std::to_string(recon_gap) + ")");
  }
  if (ranked.weight() > M + 1e-12) {
    throw ContractError("precondition violated: combination weight exceeds M");
  }
  const double eta = gowers_norm(g, m + 1).value;
  if (eta > epsilon * epsilon / M + 1e-12) {
    throw ContractError(
        "precondition violated: uniform part norm exceeds epsilon^2 / M");
  }
  const double h_l2 = h.l2_norm();
  if (h_l2 > epsilon + 1e-12) {
    throw ContractError("precondition violated: rough part exceeds epsilon");
  }

  std::vector<double> ranks;
  for (const auto& t : ranked.terms()) ranks.push_back(*t.rank);

  // Gap length: M^2 p^{-t} <= epsilon^2.
  const int t_gap = std::max(
      1, static_cast<int>(std::ceil(2.0 * std::log(M / epsilon) /
                                    std::log(static_cast<double>(p)))));

  const int max_windows = static_cast<int>(std::ceil(M / epsilon)) + 1;
  int window = 0;
  double window_weight = 0.0;
  for (; window <= max_windows; ++window) {
    const double lo = R + static_cast<double>(window) * t_gap;
    window_weight = 0.0;
    for (const auto& t : ranked.terms()) {
      if (*t.rank >= lo && *t.rank < lo + t_gap) {
        window_weight += std::abs(t.lambda);
      }
    }
    if (window_weight <= epsilon) break;
  }
  if (window > max_windows) {
    throw ContractError("no low-weight rank window found");
  }
  const double r1 = R + static_cast<double>(window) * t_gap;

  std::vector<std::size_t> low, mid, high;
  for (std::size_t i = 0; i < ranked.terms().size(); ++i) {
    const double r = *ranked.terms()[i].rank;
    if (r < r1) {
      low.push_back(i);
    } else if (r < r1 + t_gap) {
      mid.push_back(i);
    } else {
      high.push_back(i);
    }
  }
  double low_weight = 0.0;
  double kept_weight = 0.0;
  for (const auto i : low) low_weight += std::abs(ranked.terms()[i].lambda);
  for (const auto i : high) kept_weight += std::abs(ranked.terms()[i].lambda);

  const TableFunction f_low = materialize_subset(ranked, low);
  const TableFunction f_mid = materialize_subset(ranked, mid);
  const TableFunction f_high = materialize_subset(ranked, high);
  const TableFunction h_out = h.plus(f_mid).plus(f_low);

  const double low_l2 = f_low.l2_norm();
  const double h_out_l2 = h_out.l2_norm();
  const double f_unorm = gowers_norm(f, m).value;
  const double p_r1 = std::pow(static_cast<double>(p), r1);
  const double realized = f_unorm * M * p_r1;

  std::vector<ProofBound> bounds;
  const auto bound = [&](const std::string& name, double lhs, double rhs) {
    bounds.push_back(ProofBound{name, lhs, rhs, lhs <= rhs + 1e-9});
  };
  bound("low-vs-f", std::abs(f_low.inner_product(f)), M * p_r1 * f_unorm);
  bound("low-vs-high", std::abs(f_low.inner_product(f_high)),
        M * M * std::pow(static_cast<double>(p), -t_gap));
  bound("low-vs-uniform", std::abs(f_low.inner_product(g)), M * eta);
  bound("low-vs-rough", std::abs(f_low.inner_product(h.plus(f_mid))),
        2.0 * epsilon * low_l2);

  PhaseCombination kept(p, n);
  int min_deg = 0;
  int max_deg = 0;
  for (const auto i : high) {
    const auto& t = ranked.terms()[i];
    kept.terms().push_back(t);
    const int deg = t.pi.degree();
    min_deg = min_deg == 0 ? deg : std::min(min_deg, deg);
    max_deg = std::max(max_deg, deg);
  }
  Decomposition filtered{f,
                         std::move(kept),
                         g,
                         h_out,
                         min_deg == 0 ? 1 : min_deg,
                         max_deg == 0 ? m : max_deg,
                         5.0 * epsilon,
                         eta,
                         r1 + t_gap,
                         M};

  return FilterReport{std::move(filtered),
                      t_gap,
                      r1,
                      window_weight,
                      low_weight,
                      kept_weight,
                      low_l2,
                      h_out_l2,
                      f_unorm,
                      eta,
                      realized,
                      realized <= epsilon * epsilon + 1e-12,
                      h_out_l2 <= 5.0 * epsilon + 1e-9,
                      std::move(bounds),
                      std::move(ranks)};
}

VerifyDecompositionReport verify_decomposition(const Decomposition& dec) {
  VerifyDecompositionReport report;
  const auto clause = [&](const std::string& name, double lhs, double rhs,
                          bool pass) {
    report.clauses.push_back(VerifyClause{name, lhs, rhs, pass});
    report.all_pass = report.all_pass && pass;
  };

  const TableFunction sum =
      dec.structured.materialize().plus(dec.g).plus(dec.h);
  const double gap = max_pointwise_gap(dec.f, sum);
  clause("reconstruction", gap, 1e-9, gap <= 1e-9);

  const double weight = dec.structured.weight();
  if (dec.declared_weight) {
    clause("weight-cap", weight, *dec.declared_weight,
           weight <= *dec.declared_weight + 1e-12);
  }

  int degree_violations = 0;
  for (const auto& t : dec.structured.terms()) {
    const int deg = t.pi.degree();
    if (deg < dec.s || deg > dec.k) ++degree_violations;
  }
  clause("degree-range", static_cast<double>(degree_violations), 0.0,
         degree_violations == 0);

  PhaseCombination ranked = dec.structured;
  ranked.rank_all();
  double min_rank = std::numeric_limits<double>::infinity();
  for (const auto& t : ranked.terms()) min_rank = std::min(min_rank, *t.rank);
  clause("rank-threshold", min_rank, dec.R, min_rank >= dec.R - 1e-12);

  const double g_norm = gowers_norm(dec.g, dec.k + 1).value;
  clause("uniform-norm", g_norm, dec.eta, g_norm <= dec.eta + 1e-9);

  const double h_norm = dec.h.l2_norm();
  clause("rough-l2", h_norm, dec.epsilon, h_norm <= dec.epsilon + 1e-9);

  return report;
}

namespace {

std::string resolve_ref(const std::string& ref, const std::string& json_path) {
  namespace fs = std::filesystem;
  fs::path p(ref);
  if (p.is_absolute() || fs::exists(p)) return ref;
  const fs::path sibling = fs::path(json_path).parent_path() / p;
  return sibling.string();
}

}  // namespace

Decomposition load_decomposition(const std::string& json_path, std::int32_t p,
                                 int n) {
  std::ifstream in(json_path);
  if (!in) throw ContractError("cannot open decomposition " + json_path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ContractError("bad decomposition JSON: " + std::string(e.what()));
  }

  PhaseCombination combination(p, n);
  for (const auto& term : doc.at("terms")) {
    combination.add_term(term.at("lambda").get<double>(),
                         parse_polynomial(
                             term.at("polynomial_text").get<std::string>(), p,
                             n));
    if (term.contains("rank") && !term.at("rank").is_null()) {
      combination.terms().back().rank = term.at("rank").get<double>();
    }
  }

  const TableFunction g =
      read_table_binary(resolve_ref(doc.at("g_ref").get<std::string>(),
                                    json_path),
                        p, n);
  const TableFunction h =
      read_table_binary(resolve_ref(doc.at("h_ref").get<std::string>(),
                                    json_path),
                        p, n);

  const auto& params = doc.at("params");
  Decomposition dec{TableFunction(p, n),
                    std::move(combination),
                    g,
                    h,
                    params.at("s").get<int>(),
                    params.at("k").get<int>(),
                    params.at("epsilon").get<double>(),
                    params.at("eta").get<double>(),
                    params.at("R").get<double>(),
                    std::nullopt};
  if (params.contains("m0") && !params.at("m0").is_null()) {
    dec.declared_weight = params.at("m0").get<double>();
  }
  if (doc.contains("f_ref") && !doc.at("f_ref").is_null()) {
    dec.f = read_table_binary(resolve_ref(doc.at("f_ref").get<std::string>(),
                                          json_path),
                              p, n);
  } else {
    dec.f = dec.structured.materialize().plus(dec.g).plus(dec.h);
  }
  return dec;
}

void save_decomposition(const Decomposition& dec, const std::string& json_path,
                        const std::string& table_prefix) {
  nlohmann::json doc;
  doc["terms"] = nlohmann::json::array();
  for (const auto& t : dec.structured.terms()) {
    nlohmann::json term;
    term["lambda"] = t.lambda;
    term["polynomial_text"] = t.pi.to_string();
    if (t.rank && std::isfinite(*t.rank)) {
      term["rank"] = *t.rank;
    } else {
      term["rank"] = nullptr;
    }
    doc["terms"].push_back(std::move(term));
  }

  const std::string f_ref = table_prefix + "-f.bin";
  const std::string g_ref = table_prefix + "-g.bin";
  const std::string h_ref = table_prefix + "-h.bin";
  write_table_binary(f_ref, dec.f);
  write_table_binary(g_ref, dec.g);
  write_table_binary(h_ref, dec.h);
  doc["f_ref"] = f_ref;
  doc["g_ref"] = g_ref;
  doc["h_ref"] = h_ref;

  doc["params"] = {{"s", dec.s},       {"k", dec.k}, {"epsilon", dec.epsilon},
                   {"eta", dec.eta},   {"R", dec.R}};
  if (dec.declared_weight) doc["params"]["m0"] = *dec.declared_weight;

  std::ofstream out(json_path);
  if (!out) throw ContractError("cannot write decomposition " + json_path);
  out << doc.dump(2) << '\n';
  if (!out) throw ContractError("write failed for " + json_path);
}

}  // namespace fplab
