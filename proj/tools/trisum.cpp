// Command-line front end: every subcommand runs one operation and writes a
// machine-readable report (JSON by default, CSV or an aligned table on
// request).  Identical parameters and seed produce byte-identical JSON.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trisum/constructions.hpp"
#include "trisum/errors.hpp"
#include "trisum/int_set.hpp"
#include "trisum/io.hpp"
#include "trisum/prime_table.hpp"
#include "trisum/proof_lab.hpp"
#include "trisum/rep.hpp"
#include "trisum/sieve_bounds.hpp"
#include "trisum/util.hpp"
#include "trisum/version.hpp"

namespace {

using nlohmann::json;
using namespace trisum;

struct Output {
  std::string format = "json";
  std::string path;
};

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string scalar_to_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const json& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
  } else if (node.is_array()) {
    size_t i = 0;
    for (const auto& value : node) flatten(value, prefix + "." + std::to_string(i++), rows);
  } else {
    rows.emplace_back(prefix, scalar_to_string(node));
  }
}

// One table per report: a designated tabular field when the command has
// one (documented in docs/formats.md), key/value rows otherwise.
void write_csv(std::ostream& os, const json& result) {
  if (result.contains("witness")) {
    os << "q,contribution\n";
    for (const auto& row : result.at("witness"))
      os << row.at("q").dump() << ',' << row.at("contribution").dump() << '\n';
    return;
  }
  if (result.contains("per_prime_terms")) {
    os << "p,setminus,s0,bound29,term\n";
    for (const auto& row : result.at("per_prime_terms"))
      os << row.at("p").dump() << ',' << row.at("setminus").dump() << ','
         << row.at("s0").dump() << ',' << row.at("bound29").dump() << ','
         << row.at("term").dump() << '\n';
    return;
  }
  if (result.contains("counts")) {
    os << "n,count\n";
    for (const auto& row : result.at("counts"))
      os << row.at(0).dump() << ',' << row.at(1).dump() << '\n';
    return;
  }
  if (result.contains("product_sizes") && result.contains("sumset_sizes")) {
    const auto& products = result.at("product_sizes");
    const auto& sums = result.at("sumset_sizes");
    os << "trial,product_size,sumset_size\n";
    for (size_t i = 0; i < products.size(); ++i)
      os << i << ',' << products.at(i).dump() << ',' << sums.at(i).dump() << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(result, "", rows);
  os << "key,value\n";
  for (const auto& [key, value] : rows) os << csv_escape(key) << ',' << csv_escape(value) << '\n';
}

void write_table(std::ostream& os, const json& result) {
  std::vector<std::pair<std::string, std::string>> rows;
  size_t width = 0;
  for (const auto& [key, value] : result.items()) {
    if (value.is_array() && value.size() > 8) {
      rows.emplace_back(key, "[" + std::to_string(value.size()) + " entries]");
    } else {
      rows.emplace_back(key, scalar_to_string(value));
    }
    width = std::max(width, key.size());
  }
  for (const auto& [key, value] : rows)
    os << key << std::string(width - key.size() + 2, ' ') << value << '\n';
}

void emit(const Output& out, const json& report) {
  std::ostringstream body;
  if (out.format == "json") {
    body << report.dump(2) << '\n';
  } else if (out.format == "csv") {
    write_csv(body, report.at("result"));
  } else {
    body << "command: " << report.at("command").get<std::string>() << "\n"
         << "config:  " << report.at("config").dump() << "\n\n";
    write_table(body, report.at("result"));
  }
  if (out.path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + out.path);
    file << body.str();
  }
}

// Shared omega-source flags for the sieve bound commands.
struct OmegaArgs {
  int64_t constant = -1;
  std::string honest_file;
  std::string map_file;

  void add_to(CLI::App* cmd) {
    auto* c = cmd->add_option("--omega-const", constant, "omega(p) = W for every prime p");
    auto* h = cmd->add_option("--omega-honest", honest_file,
                              "set file; omega(p) = p - h(p) for the set");
    auto* m = cmd->add_option("--omega-file", map_file, "file of 'p omega' lines");
    c->excludes(h)->excludes(m);
    h->excludes(m);
  }

  OmegaMap build(int64_t max_p, json& config) const {
    if (constant >= 0) {
      config["omega"] = {{"const", constant}};
      return OmegaMap::constant(constant, max_p);
    }
    if (!honest_file.empty()) {
      config["omega"] = {{"honest", honest_file}};
      return OmegaMap::honest(read_int_set_text(honest_file), max_p);
    }
    if (!map_file.empty()) {
      config["omega"] = {{"file", map_file}};
      std::ifstream in(map_file);
      if (!in) throw std::runtime_error("cannot open omega file " + map_file);
      OmegaMap omega;
      int64_t p = 0, w = 0;
      while (in >> p >> w) omega.set(p, w);
      if (!in.eof()) throw std::runtime_error("malformed omega file " + map_file);
      return omega;
    }
    throw CLI::ValidationError("one of --omega-const/--omega-honest/--omega-file is required");
  }
};

int run(int argc, char** argv) {
  CLI::App app{"workbench for prime sumsets, sieve bounds and occupancy statistics"};
  app.set_version_flag("--version", std::string(kVersion));
  app.set_config("--config", "", "read parameters from an INI config file");
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--output", out.path, "write the report to a file instead of stdout");

  json report;

  // ---- sieve-table ----------------------------------------------------
  auto* table_cmd = app.add_subcommand("sieve-table", "build a prime table");
  struct {
    int64_t limit = 0;
    int64_t lo = -1, hi = -1;
    std::string write_primes;
  } ta;
  table_cmd->add_option("--limit", ta.limit, "sieve limit")->required();
  table_cmd->add_option("--lo", ta.lo, "report primes in (lo, hi]");
  table_cmd->add_option("--hi", ta.hi, "report primes in (lo, hi]");
  table_cmd->add_option("--write-primes", ta.write_primes, "write all primes to a set file");
  table_cmd->callback([&] {
    PrimeTable table(ta.limit);
    json config = {{"limit", ta.limit}};
    json result = {{"limit", ta.limit},
                   {"prime_count", table.count_leq(ta.limit)},
                   {"pnt_estimate", pnt_estimate(static_cast<double>(ta.limit))}};
    if (ta.lo >= 0 && ta.hi >= 0) {
      config["lo"] = ta.lo;
      config["hi"] = ta.hi;
      result["range_primes"] = table.primes_in(ta.lo, ta.hi);
    }
    if (!ta.write_primes.empty()) {
      write_int_set_text(ta.write_primes, IntSet(table.primes(), ta.limit));
      result["primes_written"] = ta.write_primes;
    }
    report = make_report("sieve-table", config, std::move(result));
  });

  // ---- sumset ---------------------------------------------------------
  auto* sumset_cmd = app.add_subcommand("sumset", "sumset of two or more sets");
  struct {
    std::vector<std::string> sets;
    std::string out_file;
  } su;
  sumset_cmd->add_option("--set", su.sets, "set file (repeat for k-fold sums)")
      ->required()
      ->expected(1, 16);
  sumset_cmd->add_option("--out", su.out_file, "write the sumset to a set file");
  sumset_cmd->callback([&] {
    std::vector<IntSet> sets;
    for (const auto& f : su.sets) sets.push_back(read_int_set_text(f));
    const IntSet sum = k_fold_sumset(sets);
    json sizes = json::array();
    for (const auto& s : sets) sizes.push_back(s.size());
    json result = {{"input_sizes", sizes},
                   {"sumset_size", sum.size()},
                   {"bound", sum.bound()},
                   {"min", sum.min()},
                   {"max", sum.max()}};
    if (!su.out_file.empty()) {
      write_int_set_text(su.out_file, sum);
      result["sumset_written"] = su.out_file;
    } else {
      result["sumset"] = int_set_to_json(sum);
    }
    report = make_report("sumset", {{"sets", su.sets}}, std::move(result));
  });

  // ---- rep ------------------------------------------------------------
  auto* rep_cmd = app.add_subcommand("rep", "representation counts r(n; A1..Ak)");
  std::vector<std::string> rep_sets;
  rep_cmd->add_option("--set", rep_sets, "set file (repeatable)")->required()->expected(1, 16);
  rep_cmd->callback([&] {
    std::vector<IntSet> sets;
    for (const auto& f : rep_sets) sets.push_back(read_int_set_text(f));
    report = make_report("rep", {{"sets", rep_sets}}, representation_counts(sets));
  });

  // ---- regularity -----------------------------------------------------
  auto* reg_cmd = app.add_subcommand("regularity", "heavy-sum diagnostic at (x, D)");
  struct {
    std::vector<std::string> sets;
    int64_t x = 0;
    double d = 0.0;
  } re;
  reg_cmd->add_option("--set", re.sets, "set file (repeatable)")->required()->expected(1, 16);
  reg_cmd->add_option("--x", re.x, "counting limit")->required();
  reg_cmd->add_option("--D", re.d, "threshold exponent (threshold = log^D x)")->required();
  reg_cmd->callback([&] {
    std::vector<IntSet> sets;
    for (const auto& f : re.sets) sets.push_back(read_int_set_text(f));
    json result = regularity_diagnostic(sets, re.x, re.d);
    result["product_vs_sumset"] = product_vs_sumset_ratio(sets, re.x);
    report = make_report("regularity", {{"sets", re.sets}, {"x", re.x}, {"D", re.d}},
                         std::move(result));
  });

  // ---- sieve ----------------------------------------------------------
  auto* sieve_cmd = app.add_subcommand("sieve", "sieve bounds and related checks");
  sieve_cmd->require_subcommand(1);

  struct {
    int64_t x = 0, q = 0, t = 0, z = 0, u = 0, m = 0, k = 0, r = 0, p = 0;
    double threshold = 0.0;
    std::string input, g_file, h_file;
    OmegaArgs omega;
  } sv;

  auto* mont = sieve_cmd->add_subcommand("montgomery", "large sieve bound");
  mont->add_option("--x", sv.x)->required();
  mont->add_option("--Q", sv.q)->required();
  sv.omega.add_to(mont);
  mont->callback([&] {
    json config = {{"x", sv.x}, {"Q", sv.q}};
    const OmegaMap omega = sv.omega.build(sv.q, config);
    report = make_report("sieve montgomery", config, montgomery_bound(sv.x, sv.q, omega));
  });

  auto* vaughan = sieve_cmd->add_subcommand("vaughan", "power-saving large sieve corollary");
  vaughan->add_option("--x", sv.x)->required();
  vaughan->add_option("--T", sv.t)->required();
  sv.omega.add_to(vaughan);
  vaughan->callback([&] {
    json config = {{"x", sv.x}, {"T", sv.t}};
    const OmegaMap omega = sv.omega.build(sv.t, config);
    report = make_report("sieve vaughan", config, vaughan_bound(sv.x, sv.t, omega));
  });

  auto* brun = sieve_cmd->add_subcommand("brun", "Brun upper-bound main term");
  brun->add_option("--x", sv.x)->required();
  brun->add_option("--z", sv.z)->required();
  sv.omega.add_to(brun);
  brun->callback([&] {
    json config = {{"x", sv.x}, {"z", sv.z}};
    const OmegaMap omega = sv.omega.build(sv.z, config);
    report = make_report("sieve brun", config, brun_product_bound(sv.x, sv.z, omega));
  });

  auto* gallagher = sieve_cmd->add_subcommand("gallagher", "larger sieve sums");
  gallagher->add_option("--input", sv.input, "set file for J")->required();
  gallagher->add_option("--x", sv.x)->required();
  gallagher->add_option("--U", sv.u)->required();
  gallagher->callback([&] {
    const IntSet j = read_int_set_text(sv.input);
    json result = gallagher_sums(j, sv.x, sv.u);
    result["occupancy_sum"] = sv.u >= 2 ? json(gallagher_occupancy_sum(j, sv.u)) : json();
    report = make_report("sieve gallagher", {{"input", sv.input}, {"x", sv.x}, {"U", sv.u}},
                         std::move(result));
  });

  auto* cd = sieve_cmd->add_subcommand("cd", "Cauchy-Davenport occupancy check");
  cd->add_option("--g", sv.g_file, "set file for G")->required();
  cd->add_option("--h", sv.h_file, "set file for H")->required();
  cd->add_option("--p", sv.p, "prime modulus")->required();
  cd->callback([&] {
    report = make_report("sieve cd", {{"g", sv.g_file}, {"h", sv.h_file}, {"p", sv.p}},
                         cauchy_davenport_check(read_int_set_text(sv.g_file),
                                                read_int_set_text(sv.h_file), sv.p));
  });

  auto* square = sieve_cmd->add_subcommand("square-mass", "occupancy square-mass floor");
  square->add_option("--input", sv.input, "set file for J")->required();
  square->add_option("--m", sv.m, "modulus")->required();
  square->add_option("--k", sv.k, "occupancy cap")->required();
  square->callback([&] {
    report = make_report("sieve square-mass", {{"input", sv.input}, {"m", sv.m}, {"k", sv.k}},
                         square_mass_check(read_int_set_text(sv.input), sv.m, sv.k));
  });

  auto* constrained = sieve_cmd->add_subcommand(
      "constrained-count", "integers in [0, x) with small divisor log-weight");
  constrained->add_option("--x", sv.x)->required();
  constrained->add_option("--k", sv.k)->required();
  constrained->add_option("--r", sv.r)->required();
  constrained->add_option("--Q", sv.q)->required();
  constrained->add_option("--threshold", sv.threshold)->required();
  constrained->callback([&] {
    const int64_t count = count_constrained_integers(sv.x, sv.k, sv.r, sv.q, sv.threshold);
    report = make_report("sieve constrained-count",
                         {{"x", sv.x},
                          {"k", sv.k},
                          {"r", sv.r},
                          {"Q", sv.q},
                          {"threshold", sv.threshold}},
                         json{{"count", count}});
  });

  // ---- hl-triple --------------------------------------------------------
  auto* hl = app.add_subcommand("hl-triple",
                                "A = B = {1,7} and C from the prime triple n+2, n+8, n+14");
  struct {
    int64_t x = 0;
    int64_t limit = 0;
  } hl_args;
  hl->add_option("--x", hl_args.x, "search limit for C")->required();
  hl->add_option("--limit", hl_args.limit, "prime table limit (default x + 14)");
  hl->callback([&] {
    const int64_t limit = hl_args.limit > 0 ? hl_args.limit : hl_args.x + 14;
    PrimeTable table(limit);
    const DecompositionWitness w = hl_triple(hl_args.x, table);
    json result = w;
    const double lx = std::log(static_cast<double>(hl_args.x));
    result["measured_hl_ratio"] =
        static_cast<double>(w.C.size()) * lx * lx * lx / static_cast<double>(hl_args.x);
    result["C_size"] = w.C.size();
    report = make_report("hl-triple", {{"x", hl_args.x}, {"limit", limit}}, std::move(result));
  });

  // ---- est ---------------------------------------------------------------
  auto* est = app.add_subcommand("est", "most popular difference pattern extraction");
  struct {
    int64_t tau = 0, x = 0;
    bool from_primes = false;
    std::string input;
  } est_args;
  est->add_option("--tau", est_args.tau, "pattern size")->required();
  est->add_option("--x", est_args.x, "universe limit")->required();
  auto* est_primes = est->add_flag("--from-primes", est_args.from_primes, "T = primes <= x");
  est->add_option("--input", est_args.input, "set file for T")->excludes(est_primes);
  est->callback([&] {
    IntSet t;
    if (est_args.from_primes) {
      PrimeTable table(est_args.x);
      t = IntSet(table.primes(), est_args.x);
    } else if (!est_args.input.empty()) {
      t = read_int_set_text(est_args.input, est_args.x);
    } else {
      throw CLI::ValidationError("est: need --from-primes or --input");
    }
    json config = {{"tau", est_args.tau},
                   {"x", est_args.x},
                   {"source", est_args.from_primes ? json("primes") : json(est_args.input)}};
    report = make_report("est", config, est_extract(t, est_args.x, est_args.tau));
  });

  // ---- est-double ----------------------------------------------------------
  auto* est2 = app.add_subcommand("est-double", "chained extraction into a witness triple");
  struct {
    int64_t kappa1 = 0, kappa2 = 0, x = 0;
    bool from_primes = false;
    bool verify = false;
    std::string input;
  } e2;
  est2->add_option("--kappa1", e2.kappa1)->required();
  est2->add_option("--kappa2", e2.kappa2)->required();
  est2->add_option("--x", e2.x)->required();
  auto* est2_primes = est2->add_flag("--from-primes", e2.from_primes, "T = primes <= x");
  est2->add_option("--input", e2.input, "set file for T")->excludes(est2_primes);
  est2->add_flag("--verify", e2.verify, "check primality of A+B+C against a table");
  est2->callback([&] {
    IntSet t;
    if (e2.from_primes) {
      PrimeTable table(e2.x);
      t = IntSet(table.primes(), e2.x);
    } else if (!e2.input.empty()) {
      t = read_int_set_text(e2.input, e2.x);
    } else {
      throw CLI::ValidationError("est-double: need --from-primes or --input");
    }
    DecompositionWitness w = est_double_extract(t, e2.x, e2.kappa1, e2.kappa2);
    if (e2.verify) {
      PrimeTable table(w.A.max() + w.B.max() + w.C.max());
      verify_witness(w, table);
    }
    json config = {{"kappa1", e2.kappa1},
                   {"kappa2", e2.kappa2},
                   {"x", e2.x},
                   {"source", e2.from_primes ? json("primes") : json(e2.input)},
                   {"verify", e2.verify}};
    report = make_report("est-double", config, w);
  });

  // ---- proof-lab -------------------------------------------------------
  auto* lab = app.add_subcommand("proof-lab", "finite-sample proof instrumentation");
  lab->require_subcommand(1);

  struct {
    std::string l_file, k_file, c_file, selector = "occupied";
    int64_t k = 1, q = 0, j = 1, r = 1, trials = 1000;
    uint64_t seed = 1;
    double threshold = 0.0, rho = 0.5, epsilon = 1.0 / 12.0;
  } pl;

  auto add_pair_options = [&pl](CLI::App* cmd) {
    cmd->add_option("--L", pl.l_file, "set file for L")->required();
    cmd->add_option("--K", pl.k_file, "set file for K")->required();
    cmd->add_option("--k", pl.k, "translation step")->capture_default_str();
    cmd->add_option("--Q", pl.q, "prime modulus cap (default max(|L|, |K|))");
  };
  auto pair_context = [&pl] {
    return make_pair_context(read_int_set_text(pl.l_file), read_int_set_text(pl.k_file), pl.k,
                             pl.q);
  };
  auto pair_config = [&pl](const PairContext& ctx) {
    return json{{"L", pl.l_file}, {"K", pl.k_file}, {"k", ctx.k}, {"Q", ctx.Q}};
  };

  auto* occ = lab->add_subcommand("occupancy", "disjointness and occupancy sums");
  add_pair_options(occ);
  occ->callback([&] {
    const PairContext ctx = pair_context();
    json result = {{"disjoint", disjoint_occupancy_check(ctx)}};
    if (ctx.Q >= 2) {
      result["L_sums"] = pair_occupancy_sums(ctx.L, ctx.Q);
      result["K_sums"] = pair_occupancy_sums(ctx.K, ctx.Q);
    }
    report = make_report("proof-lab occupancy", pair_config(ctx), std::move(result));
  });

  auto* wc = lab->add_subcommand("weighted-count", "log-weighted congruence pair count");
  add_pair_options(wc);
  wc->add_option("--j", pl.j, "translate multiplier")->capture_default_str();
  wc->callback([&] {
    const PairContext ctx = pair_context();
    json config = pair_config(ctx);
    config["j"] = pl.j;
    report = make_report("proof-lab weighted-count", config,
                         json{{"Z", weighted_solution_count(ctx, pl.j)}});
  });

  auto* var = lab->add_subcommand("variance", "occupancy square sums against the main term");
  add_pair_options(var);
  var->add_option("--selector", pl.selector, "class choice per prime")
      ->check(CLI::IsMember({"occupied", "translation"}))
      ->capture_default_str();
  var->add_option("--j", pl.j, "translate multiplier for the translation selector")
      ->capture_default_str();
  var->callback([&] {
    const PairContext ctx = pair_context();
    const ClassSelector selector = pl.selector == "occupied"
                                       ? select_occupied(ctx.L)
                                       : select_translation_diff(ctx.L, ctx.k, pl.j);
    json config = pair_config(ctx);
    config["selector"] = pl.selector;
    config["j"] = pl.j;
    report = make_report("proof-lab variance", config, variance_sum(ctx, selector));
  });

  auto* trans = lab->add_subcommand("translation", "translated-occupancy difference profile");
  add_pair_options(trans);
  trans->add_option("--j", pl.j, "translate multiplier")->capture_default_str();
  trans->callback([&] {
    const PairContext ctx = pair_context();
    json config = pair_config(ctx);
    config["j"] = pl.j;
    report = make_report("proof-lab translation", config, translation_profile(ctx, pl.j));
  });

  auto* smooth =
      lab->add_subcommand("smooth-fraction", "fraction of sums with small divisor weight");
  add_pair_options(smooth);
  smooth->add_option("--r", pl.r, "number of translates")->capture_default_str();
  smooth->add_option("--threshold", pl.threshold, "strict weight threshold")->required();
  smooth->callback([&] {
    const PairContext ctx = pair_context();
    json config = pair_config(ctx);
    config["r"] = pl.r;
    config["threshold"] = pl.threshold;
    report = make_report("proof-lab smooth-fraction", config,
                         njk_smooth_fraction(ctx, pl.r, pl.threshold));
  });

  auto* thin = lab->add_subcommand("thinning", "random-subset product versus sumset sizes");
  thin->add_option("--L", pl.l_file, "set file for L")->required();
  thin->add_option("--C", pl.c_file, "set file for C")->required();
  thin->add_option("--rho", pl.rho, "inclusion probability")->capture_default_str();
  thin->add_option("--trials", pl.trials)->capture_default_str();
  thin->add_option("--seed", pl.seed)->capture_default_str();
  thin->add_option("--epsilon", pl.epsilon, "event slack")->capture_default_str();
  thin->callback([&] {
    const IntSet l = read_int_set_text(pl.l_file);
    const IntSet c = read_int_set_text(pl.c_file);
    json config = {{"L", pl.l_file},     {"C", pl.c_file}, {"rho", pl.rho},
                   {"trials", pl.trials}, {"seed", pl.seed}, {"epsilon", pl.epsilon}};
    report = make_report("proof-lab thinning", config,
                         random_thinning(l, c, pl.rho, pl.trials, pl.seed, pl.epsilon));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message or help text
    return code == 0 ? 0 : 64;
  }

  emit(out, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const trisum::internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
