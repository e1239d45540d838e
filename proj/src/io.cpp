#include "trisum/io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include "trisum/version.hpp"

namespace trisum {

namespace {

IntSet build_set(std::vector<int64_t> values, std::optional<int64_t> bound) {
  int64_t b = 0;
  if (bound.has_value())
    b = *bound;
  else if (!values.empty())
    b = *std::max_element(values.begin(), values.end());
  return IntSet(std::move(values), b);
}

}  // namespace

void write_int_set_text(const std::filesystem::path& path, const IntSet& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (int64_t e : s.elements()) out << e << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

IntSet read_int_set_text(const std::filesystem::path& path, std::optional<int64_t> bound) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
  std::vector<int64_t> values;
  int64_t v = 0;
  while (in >> v) values.push_back(v);
  if (!in.eof())
    throw std::runtime_error("malformed integer in " + path.string());
  return build_set(std::move(values), bound);
}

nlohmann::json int_set_to_json(const IntSet& s) { return nlohmann::json(s.elements()); }

IntSet int_set_from_json(const nlohmann::json& j, std::optional<int64_t> bound) {
  if (!j.is_array()) throw std::runtime_error("IntSet JSON must be an array");
  std::vector<int64_t> values;
  values.reserve(j.size());
  for (const auto& v : j) values.push_back(v.get<int64_t>());
  return build_set(std::move(values), bound);
}

void to_json(nlohmann::json& j, const ResidueProfile& p) {
  j = nlohmann::json{{"modulus", p.modulus},
                     {"class_counts", p.class_counts},
                     {"occupied", p.occupied},
                     {"h", p.h()}};
}

void to_json(nlohmann::json& j, const RepFunction& r) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& [n, c] : r.counts) counts.push_back({n, c});
  j = nlohmann::json{{"k", r.k}, {"total", r.total},
                     {"support_size", static_cast<int64_t>(r.counts.size())},
                     {"counts", std::move(counts)}};
}

void to_json(nlohmann::json& j, const RegularityReport& r) {
  j = nlohmann::json{{"x", r.x},
                     {"D", r.D},
                     {"threshold", r.threshold},
                     {"heavy_set", int_set_to_json(r.heavy_set)},
                     {"heavy_mass", r.heavy_mass},
                     {"product", r.product},
                     {"ratio", r.ratio}};
}

void to_json(nlohmann::json& j, const ProductSumsetRatio& r) {
  j = nlohmann::json{{"product", r.product},
                     {"sumset_count", r.sumset_count},
                     {"ratio", r.ratio},
                     {"implied_E", r.implied_E}};
}

void to_json(nlohmann::json& j, const SieveReport& r) {
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& [q, value] : r.witness) witness.push_back({{"q", q}, {"contribution", value}});
  j = nlohmann::json{{"method", r.method},
                     {"params", r.params},
                     {"bound", r.unbounded ? nlohmann::json() : nlohmann::json(r.bound)},
                     {"unbounded", r.unbounded},
                     {"witness", std::move(witness)}};
  if (!r.caveat.empty()) j["caveat"] = r.caveat;
}

void to_json(nlohmann::json& j, const GallagherSums& g) {
  j = nlohmann::json{{"lhs_exact", g.lhs_exact},
                     {"rhs_weighted", g.rhs_weighted},
                     {"pair_sum", g.pair_sum},
                     {"hypothesis_ok", g.hypothesis_ok}};
}

void to_json(nlohmann::json& j, const CauchyDavenportCheck& c) {
  j = nlohmann::json{{"h1", c.h1}, {"h2", c.h2}, {"h3", c.h3}, {"bound", c.bound}, {"holds", c.holds}};
}

void to_json(nlohmann::json& j, const SquareMassCheck& c) {
  j = nlohmann::json{{"mass", c.mass}, {"floor", c.floor}, {"holds", c.holds}};
}

void to_json(nlohmann::json& j, const ShiftPattern& p) {
  j = nlohmann::json{{"shifts", p.shifts}, {"anchor", p.anchor}};
}

void to_json(nlohmann::json& j, const AdmissibilityResult& r) {
  j = nlohmann::json{{"admissible", r.admissible}};
  j["blocking_prime"] = r.admissible ? nlohmann::json() : nlohmann::json(r.blocking_prime);
}

void to_json(nlohmann::json& j, const DecompositionWitness& w) {
  j = nlohmann::json{{"A", int_set_to_json(w.A)},
                     {"B", int_set_to_json(w.B)},
                     {"C", int_set_to_json(w.C)},
                     {"x", w.x},
                     {"verified", w.verified},
                     {"sumset_size", w.sumset_size},
                     {"target_bound",
                      w.target_bound.has_value() ? nlohmann::json(*w.target_bound) : nlohmann::json()}};
}

void to_json(nlohmann::json& j, const EstExtraction& e) {
  j = nlohmann::json{{"A", e.A.shifts}, {"S", int_set_to_json(e.S)}, {"guarantee", e.guarantee}};
}

void to_json(nlohmann::json& j, const DisjointOccupancy& d) {
  j = nlohmann::json{{"ok", d.ok}};
  j["first_violation_prime"] = d.ok ? nlohmann::json() : nlohmann::json(d.first_violation_prime);
  j["condition"] = d.ok ? nlohmann::json() : nlohmann::json(d.condition);
}

void to_json(nlohmann::json& j, const PairOccupancySums& s) {
  j = nlohmann::json{{"sum_inv_h", s.sum_inv_h},
                     {"sum_inv_coh", s.sum_inv_coh},
                     {"skipped_full", s.skipped_full}};
}

void to_json(nlohmann::json& j, const VarianceSum& v) {
  j = nlohmann::json{{"X", v.X},
                     {"bound_main", v.bound_main},
                     {"E1", v.E1},
                     {"E2", v.E2},
                     {"E3", v.E3},
                     {"skipped_full_k", v.skipped_full_k},
                     {"skipped_full_j", v.skipped_full_j}};
}

void to_json(nlohmann::json& j, const TranslationTerm& t) {
  j = nlohmann::json{{"p", t.p},
                     {"setminus", t.setminus},
                     {"s0", t.s0},
                     {"bound29", t.bound29},
                     {"term", t.term}};
}

void to_json(nlohmann::json& j, const TranslationProfile& t) {
  j = nlohmann::json{{"profile_sum", t.profile_sum},
                     {"per_prime_terms", t.per_prime_terms},
                     {"skipped_full", t.skipped_full}};
}

void to_json(nlohmann::json& j, const SmoothFraction& f) {
  j = nlohmann::json{{"total", f.total}, {"satisfying", f.satisfying}, {"fraction", f.fraction}};
}

void to_json(nlohmann::json& j, const Prop4Split& s) {
  j = nlohmann::json{{"Z", s.Z}, {"Z1", s.Z1}, {"Z2", s.Z2}, {"cs_holds", s.cs_holds}};
}

void to_json(nlohmann::json& j, const ThinningStats& t) {
  j = nlohmann::json{{"rho", t.rho},
                     {"trials", t.trials},
                     {"seed", t.seed},
                     {"epsilon", t.epsilon},
                     {"product_sizes", t.product_sizes},
                     {"sumset_sizes", t.sumset_sizes},
                     {"mean_product", t.mean_product},
                     {"variance_product", t.variance_product},
                     {"mean_sumset", t.mean_sumset},
                     {"variance_sumset", t.variance_sumset},
                     {"mean_l_size", t.mean_l_size},
                     {"mean_c_size", t.mean_c_size},
                     {"expected_product", t.expected_product},
                     {"event_frequency", t.event_frequency}};
}

nlohmann::json make_report(std::string_view command, const nlohmann::json& config,
                           nlohmann::json result) {
  return nlohmann::json{{"schema_version", 1},
                        {"version", kVersion},
                        {"command", std::string(command)},
                        {"config", config},
                        {"result", std::move(result)}};
}

}  // namespace trisum
