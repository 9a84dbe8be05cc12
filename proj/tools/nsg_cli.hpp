#pragma once

// Command-line front end. `run` is kept separate from main() so tests can
// drive it with captured streams.
//
// Exit codes:
//   0 success
//   1 usage error
//   2 generators have gcd > 1
//   3 element budget or 64-bit range exceeded
//   4 element is not in the semigroup
//   5 invalid parameters
//   6 internal consistency check failed

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsg/nsg.hpp"

namespace nsg::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kGcdNotOne = 2,
  kBudget = 3,
  kNotMember = 4,
  kInvalidParams = 5,
  kInternal = 6,
};

inline int exit_code_for(errc code) {
  switch (code) {
    case errc::gcd_not_one: return kGcdNotOne;
    case errc::overflow:
    case errc::bound_too_large: return kBudget;
    case errc::not_member: return kNotMember;
    case errc::internal: return kInternal;
    default: return kInvalidParams;
  }
}

inline std::vector<i64> parse_generators(const std::string& text) {
  std::vector<i64> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || value < 1)
      fail(errc::invalid_argument, "generators must be comma-separated positive integers, got '" + text + "'");
    out.push_back(value);
  }
  if (out.empty()) fail(errc::invalid_argument, "empty generator list");
  return out;
}

/// Default element budget, overridable through NSG_BUDGET.
inline Budget default_budget() {
  Budget budget;
  if (const char* env = std::getenv("NSG_BUDGET")) {
    try {
      budget.elements = std::stoll(env);
    } catch (const std::exception&) {
    }
  }
  return budget;
}

inline json to_json(const Rational& r) { return r.to_string(); }

inline json to_json(const std::vector<i64>& v) { return json(v); }

inline json factorizations_json(const std::vector<Factorization>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(f.exponents);
  return out;
}

inline std::string format_double(double x) {
  if (!std::isfinite(x)) return "inf";
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

inline json double_json(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

struct Context {
  std::ostream& out;
  std::ostream& err;
  Budget budget;
  std::string format = "json";
};

inline void emit(Context& ctx, const json& value) { ctx.out << value.dump() << "\n"; }

inline json semigroup_summary(const NumericalSemigroup& s, const std::vector<i64>& input, Context& ctx) {
  json j;
  j["input"] = input;
  j["min_gens"] = s.generators();
  j["multiplicity"] = s.multiplicity();
  j["embedding_dim"] = s.embedding_dimension();
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  j["gaps"] = s.gaps();
  j["rho"] = to_json(elasticity_semigroup(s).value);
  if (s.embedding_dimension() < 2) {
    j["delta"] = json::array();
  } else {
    try {
      j["delta"] = delta_semigroup(s, ctx.budget);
    } catch (const error& e) {
      if (e.code() != errc::bound_too_large && e.code() != errc::overflow) throw;
      j["delta"] = nullptr;
      ctx.err << "notice: delta set omitted: " << e.what() << "\n";
    }
  }
  return j;
}

inline void print_info_text(Context& ctx, const json& j) {
  auto line = [&](const char* key, const json& v) { ctx.out << std::left << std::setw(15) << key << v.dump() << "\n"; };
  for (auto it = j.begin(); it != j.end(); ++it) line(it.key().c_str(), it.value());
}

inline json nearest_members(const NumericalSemigroup& s, i64 n) {
  json j;
  i64 below = n;
  while (below > 0 && !s.contains(below)) --below;
  i64 above = n < 0 ? 0 : n;
  while (!s.contains(above)) ++above;
  j["below"] = below;
  j["above"] = above;
  return j;
}

// Converts library errors into exit codes, adding a hint for non-members.
template <typename Fn>
int guarded(Context& ctx, Fn&& fn, const std::optional<std::pair<std::vector<i64>, i64>>& element = std::nullopt) {
  try {
    fn();
    return kOk;
  } catch (const error& e) {
    ctx.err << "error: " << e.what() << "\n";
    if (e.code() == errc::not_member && element) {
      try {
        const NumericalSemigroup s(element->first);
        const auto near = nearest_members(s, element->second);
        ctx.err << "hint: nearest members are " << near["below"].get<i64>() << " and " << near["above"].get<i64>()
                << "\n";
      } catch (const error&) {
      }
    }
    return exit_code_for(e.code());
  }
}

inline void write_plotdata(Context& ctx, const std::string& kind, const NumericalSemigroup& s, i64 max_n,
                           i64 element) {
  auto& os = ctx.out;
  if (kind == "elasticity") {
    os << "n,rho_num,rho_den,rho_float\n";
    for (const auto& [n, rho] : elasticity_profile(s, max_n, ctx.budget))
      os << n << "," << rho.num() << "," << rho.den() << "," << format_double(rho.to_double()) << "\n";
  } else if (kind == "deltaseq") {
    os << "n,d\n";
    for (const auto& [n, deltas] : delta_sequence(s, max_n, ctx.budget))
      for (i64 d : deltas) os << n << "," << d << "\n";
  } else if (kind == "multiset") {
    os << "length,multiplicity\n";
    for (auto [len, mult] : length_multiset(s, element).counts) os << len << "," << mult << "\n";
  } else if (kind == "lengths") {
    os << "n,min_len,max_len\n";
    const LengthExtremes extremes(s, ctx.budget);
    if (max_n > ctx.budget.elements) fail(errc::bound_too_large, "range exceeds the element budget");
    for (i64 n = 1; n <= max_n; ++n)
      if (s.contains(n)) os << n << "," << extremes.min_length(n) << "," << extremes.max_length(n) << "\n";
  } else {
    fail(errc::invalid_argument, "unknown plot kind '" + kind + "'");
  }
}

inline json stats_json(const random::SampleStats& st) {
  json j;
  j["trials"] = st.trials;
  j["cofinite"] = st.cofinite;
  j["p_cofinite"] = st.p_cofinite;
  j["mean_e"] = st.mean_e;
  j["mean_g"] = st.mean_g;
  j["mean_f"] = st.mean_f;
  j["ratio_lhs"] = st.ratio_lhs;
  j["ratio_rhs"] = double_json(st.ratio_rhs);
  return j;
}

inline std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      fail(errc::invalid_params, "cannot parse probability '" + item + "'");
    }
  }
  return out;
}

inline constexpr const char* kScanHeader = "model,size,m,p,trials,p_cofinite,mean_e,mean_g,ratio_lhs,ratio_rhs";

inline void write_scan_row(std::ostream& os, const random::SweepRow& row) {
  os << random::to_string(row.model) << "," << row.point.size << "," << row.point.m << ","
     << format_double(row.point.p) << "," << row.stats.trials << "," << format_double(row.stats.p_cofinite) << ","
     << format_double(row.stats.mean_e) << "," << format_double(row.stats.mean_g) << ","
     << format_double(row.stats.ratio_lhs) << "," << format_double(row.stats.ratio_rhs) << "\n";
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  // Data goes to `sink`, which --output points at a file.
  std::ostream sink(out.rdbuf());
  std::ofstream file;
  Context ctx{sink, err, default_budget()};

  CLI::App app{"Factorization invariants of numerical semigroups"};
  app.require_subcommand(1);
  i64 budget_override = 0;
  app.add_option("--budget", budget_override, "maximum number of elements a scan may visit (env NSG_BUDGET)");
  std::string output_path;
  app.add_option("-o,--output", output_path, "write data to this file instead of stdout");

  std::string gens_text, gens_text2, kind, model;
  i64 n = 0, max_n = 0, element = 0, length = 0, period = 0;
  int power = 2;
  bool infinity = false;

  auto* info = app.add_subcommand("info", "semigroup summary: minimal generators, m, e, F, genus, gaps, rho, delta");
  info->add_option("gens", gens_text)->required();
  info->add_option("--format", ctx.format)->check(CLI::IsMember({"json", "text"}));

  auto* facts = app.add_subcommand("factorizations", "all factorizations of n");
  facts->add_option("gens", gens_text)->required();
  facts->add_option("n", n)->required();

  auto* lset = app.add_subcommand("lengthset", "length set of n");
  lset->add_option("gens", gens_text)->required();
  lset->add_option("n", n)->required();

  auto* delta = app.add_subcommand("delta", "delta set of n");
  delta->add_option("gens", gens_text)->required();
  delta->add_option("n", n)->required();

  auto* deltaset = app.add_subcommand("deltaset", "delta set of the semigroup");
  deltaset->add_option("gens", gens_text)->required();

  auto* elast = app.add_subcommand("elasticity", "rho(n), or rho(S) when n is omitted");
  elast->add_option("gens", gens_text)->required();
  auto* elast_n = elast->add_option("n", n);

  auto* extremes = app.add_subcommand("minmax", "shortest and longest factorization lengths of n");
  extremes->add_option("gens", gens_text)->required();
  extremes->add_option("n", n)->required();

  auto* norms = app.add_subcommand("norms", "min and max of the r-th power norm (or max norm) over Z(n)");
  norms->add_option("gens", gens_text)->required();
  norms->add_option("n", n)->required();
  norms->add_option("--r", power, "power r >= 1");
  norms->add_flag("--inf", infinity, "use the max norm");

  auto* count = app.add_subcommand("count", "number of elements with the given length in their length set");
  count->add_option("gens", gens_text)->required();
  count->add_option("--length", length)->required();

  auto* multiset = app.add_subcommand("multiset", "length multiset of n with mean and median");
  multiset->add_option("gens", gens_text)->required();
  multiset->add_option("n", n)->required();

  auto* asym = app.add_subcommand("asymptotics", "limits of mean and median length over n");
  asym->add_option("gens", gens_text)->required();

  ArithParams arith_params;
  auto* arith = app.add_subcommand("arith", "closed forms for <a, a+d, ..., a+kd>");
  arith->add_option("--a", arith_params.a)->required();
  arith->add_option("--d", arith_params.d)->required();
  arith->add_option("--k", arith_params.k)->required();
  auto* arith_n = arith->add_option("n", n);

  i64 family_n = 0, family_k = 1;
  auto* family = app.add_subcommand("family", "delta-set families: deltafull (n, k) or deltaskips (n)");
  family->add_option("kind", kind)->required()->check(CLI::IsMember({"deltafull", "deltaskips"}));
  family->add_option("--n", family_n)->required();
  family->add_option("--k", family_k);
  bool validate = false;
  family->add_flag("--validate", validate, "compare the prediction against the generic computation");

  auto* compare = app.add_subcommand("compare", "compare length systems of two semigroups up to --max");
  compare->add_option("gens1", gens_text)->required();
  compare->add_option("gens2", gens_text2)->required();
  compare->add_option("--max", max_n)->required();

  auto* probe = app.add_subcommand("probe", "test eventual quasilinearity of minlen, maxlen or linf");
  probe->add_option("kind", kind)->required()->check(CLI::IsMember({"minlen", "maxlen", "linf"}));
  probe->add_option("gens", gens_text)->required();
  probe->add_option("--max", max_n)->required();
  probe->add_option("--period", period, "defaults to nk, n1 or the generator sum");

  auto* plot = app.add_subcommand("plotdata", "CSV data for elasticity, deltaseq, multiset or lengths plots");
  plot->add_option("kind", kind)->required()->check(CLI::IsMember({"elasticity", "deltaseq", "multiset", "lengths"}));
  plot->add_option("gens", gens_text)->required();
  plot->add_option("--max", max_n);
  plot->add_option("--element", element);

  i64 M = 0, m = 0, N = 0, trials = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string scan;
  unsigned threads = 1;
  auto* rnd = app.add_subcommand("random", "Monte-Carlo estimates for the er, mult and inter models");
  rnd->add_option("model", model)->required()->check(CLI::IsMember({"er", "mult", "inter"}));
  rnd->add_option("--M", M);
  rnd->add_option("--m", m);
  rnd->add_option("--N", N);
  rnd->add_option("--p", p);
  rnd->add_option("--trials", trials);
  rnd->add_option("--seed", seed);
  rnd->add_option("--scan", scan, "comma-separated ascending p values; emits CSV");
  rnd->add_option("--threads", threads);

  std::vector<const char*> argv{"nsg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out, usage_err;
    const int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    err << usage_err.str();
    return code == 0 ? kOk : kUsage;
  }
  if (budget_override > 0) ctx.budget.elements = budget_override;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      err << "error: cannot open " << output_path << " for writing\n";
      return kInvalidParams;
    }
    sink.rdbuf(file.rdbuf());
  }

  std::vector<i64> gens;
  auto semigroup = [&]() {
    gens = parse_generators(gens_text);
    return NumericalSemigroup(gens);
  };
  std::optional<std::pair<std::vector<i64>, i64>> member_hint;
  if (!gens_text.empty()) {
    try {
      member_hint = std::make_pair(parse_generators(gens_text), n);
    } catch (const error&) {
    }
  }

  return guarded(
      ctx,
      [&] {
        if (info->parsed()) {
          const auto s = semigroup();
          const auto j = semigroup_summary(s, gens, ctx);
          if (ctx.format == "text")
            print_info_text(ctx, j);
          else
            emit(ctx, j);
        } else if (facts->parsed()) {
          emit(ctx, factorizations_json(factorizations(semigroup(), n)));
        } else if (lset->parsed()) {
          emit(ctx, length_set(semigroup(), n, ctx.budget).lengths);
        } else if (delta->parsed()) {
          emit(ctx, delta_element(semigroup(), n, ctx.budget));
        } else if (deltaset->parsed()) {
          emit(ctx, delta_semigroup(semigroup(), ctx.budget));
        } else if (elast->parsed()) {
          const auto s = semigroup();
          json j;
          if (elast_n->count() > 0) {
            const auto e = elasticity_element(s, n);
            j["n"] = n;
            j["max_len"] = e.numerator;
            j["min_len"] = e.denominator;
            j["rho"] = to_json(e.value);
          } else {
            const auto e = elasticity_semigroup(s);
            j["rho"] = to_json(e.value);
            j["witness"] = e.witness;
          }
          emit(ctx, j);
        } else if (extremes->parsed()) {
          const auto s = semigroup();
          const LengthExtremes ex(s, ctx.budget);
          emit(ctx, json{{"n", n}, {"min_len", ex.min_length(n)}, {"max_len", ex.max_length(n)}});
        } else if (norms->parsed()) {
          const auto order = infinity ? NormOrder::max_norm() : NormOrder::finite(power);
          const auto r = norm_extremes(semigroup(), n, order);
          emit(ctx, json{{"n", n}, {"r", infinity ? json("inf") : json(power)}, {"min", r.min_value},
                         {"max", r.max_value}});
        } else if (count->parsed()) {
          emit(ctx, json{{"length", length}, {"count", count_by_length(semigroup(), length, ctx.budget)}});
        } else if (multiset->parsed()) {
          const auto ms = length_multiset(semigroup(), n);
          json counts = json::array();
          for (auto [len, mult] : ms.counts) counts.push_back({len, mult});
          json j{{"n", n}, {"total", ms.total}, {"counts", counts}};
          if (n > 0) {
            j["mean"] = to_json(mean_length(ms));
            j["median"] = to_json(median_length(ms));
          }
          emit(ctx, j);
        } else if (asym->parsed()) {
          const auto s = semigroup();
          json j{{"min_gens", s.generators()}, {"mean_asymptote", to_json(mean_asymptote(s))}};
          if (s.embedding_dimension() == 3) {
            const auto med = median_asymptote(s);
            j["fulcrum"] = to_json(med.fulcrum);
            j["median_asymptote"] = med.value;
          }
          emit(ctx, j);
        } else if (arith->parsed()) {
          arith_params.validate();
          json j{{"min_gens", arith_params.generators()}, {"delta", arith_delta(arith_params)}};
          if (arith_n->count() > 0) {
            j["n"] = n;
            const bool member = arith_membership(arith_params, n);
            j["member"] = member;
            if (const auto rep = detail::try_canonical_rep(arith_params, n))
              j["canonical"] = json{{"c1", rep->c1}, {"c2", rep->c2}};
            if (member) j["lengths"] = arith_length_set(arith_params, n);
          }
          emit(ctx, j);
        } else if (family->parsed()) {
          const auto fam = kind == "deltafull" ? family_deltafull(family_n, family_k) : family_deltaskips(family_n);
          json j{{"min_gens", fam.semigroup.generators()}, {"predicted_delta", fam.predicted_delta}};
          if (validate) {
            const auto check = validate_family(fam, ctx.budget);
            j["computed_delta"] = check.computed_delta;
            j["three_generated"] = check.three_generated;
            j["matches"] = check.delta_matches;
          }
          emit(ctx, j);
        } else if (compare->parsed()) {
          const auto s1 = semigroup();
          const NumericalSemigroup s2(parse_generators(gens_text2));
          const auto cmp = length_systems_equal(s1, s2, max_n, ctx.budget);
          json j{{"equal_up_to", max_n}, {"equal", cmp.equal}};
          if (cmp.witness_side)
            j["witness"] = json{{"side", *cmp.witness_side},
                                {"element", cmp.witness_element},
                                {"lengths", cmp.witness_lengths}};
          emit(ctx, j);
        } else if (probe->parsed()) {
          const auto s = semigroup();
          std::vector<std::pair<i64, Rational>> seq;
          i64 default_period = 0;
          if (kind == "linf") {
            const auto best = min_max_norm_sequence(s, max_n, ctx.budget);
            for (i64 x = 0; x <= max_n; ++x)
              if (best[static_cast<std::size_t>(x)] >= 0) seq.emplace_back(x, Rational(best[static_cast<std::size_t>(x)]));
            for (i64 g : s.generators()) default_period += g;
          } else {
            const LengthExtremes ex(s, ctx.budget);
            if (max_n > ctx.budget.elements) fail(errc::bound_too_large, "range exceeds the element budget");
            for (i64 x = 0; x <= max_n; ++x)
              if (s.contains(x)) seq.emplace_back(x, Rational(kind == "minlen" ? ex.min_length(x) : ex.max_length(x)));
            default_period = kind == "minlen" ? s.largest_generator() : s.multiplicity();
          }
          const i64 per = period > 0 ? period : default_period;
          const auto r = quasi_probe(seq, per, 1, Rational(1, default_period));
          json residuals = json::array();
          for (const auto& v : r.residuals) residuals.push_back(v ? json(v->to_string()) : json(nullptr));
          emit(ctx, json{{"quasi", r.quasi}, {"onset", r.onset}, {"period", r.period},
                         {"slope", to_json(r.slope)}, {"residuals", residuals}});
        } else if (plot->parsed()) {
          const auto s = semigroup();
          if (kind == "multiset" && element <= 0) fail(errc::invalid_argument, "--element is required");
          if (kind != "multiset" && max_n <= 0) fail(errc::invalid_argument, "--max is required");
          member_hint = std::make_pair(gens, element);
          write_plotdata(ctx, kind, s, max_n, element);
        } else if (rnd->parsed()) {
          const auto which = model == "er" ? random::Model::er
                             : model == "mult" ? random::Model::multiplicity
                                               : random::Model::intersection;
          const i64 size = which == random::Model::intersection ? N : M;
          if (!scan.empty()) {
            std::vector<random::GridPoint> grid;
            for (double q : parse_doubles(scan)) grid.push_back({size, m, q});
            for (std::size_t i = 1; i < grid.size(); ++i)
              if (grid[i].p < grid[i - 1].p) fail(errc::invalid_params, "scan values must be ascending");
            const auto rows = random::model_sweep(which, grid, trials, seed, threads);
            ctx.out << kScanHeader << "\n";
            for (const auto& row : rows) write_scan_row(ctx.out, row);
          } else {
            const auto st = random::run_model(which, {size, m, p}, trials, seed, threads);
            json j{{"model", model}, {"seed", seed}, {"trials", trials}, {"p", p}};
            if (which == random::Model::intersection)
              j["N"] = N;
            else
              j["M"] = M;
            if (which == random::Model::multiplicity) j["m"] = m;
            if (trials == 1) {
              const auto seed0 = random::trial_seed(seed, 0);
              const auto report = which == random::Model::er ? random::sample_er({M, p}, seed0)
                                  : which == random::Model::multiplicity
                                      ? random::sample_multiplicity_model({M, m, p}, seed0)
                                      : random::sample_intersection_model({N, p}, seed0);
              json t{{"selected", report.selected}, {"classification", random::to_string(report.classification)}};
              if (!report.selected_pairs.empty()) {
                json pairs = json::array();
                for (auto [a, b] : report.selected_pairs) pairs.push_back({a, b});
                t["selected_pairs"] = pairs;
              }
              if (report.invariants) {
                const auto& inv = *report.invariants;
                const NumericalSemigroup s(inv.min_gens);
                t["min_gens"] = inv.min_gens;
                t["embedding_dim"] = inv.embedding_dim;
                t["genus"] = inv.genus;
                t["frobenius"] = inv.frobenius;
                t["gaps"] = s.gaps();
              }
              j["trial"] = t;
            }
            j["stats"] = stats_json(st);
            emit(ctx, j);
          }
        }
      },
      member_hint);
}

}  // namespace nsg::cli
