#include "rlc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "rlc/bounds.hpp"
#include "rlc/ensemble.hpp"
#include "rlc/errors.hpp"
#include "rlc/exact.hpp"
#include "rlc/field.hpp"
#include "rlc/moments.hpp"
#include "rlc/parallel.hpp"

namespace rlc::cli {

namespace {

using json = nlohmann::ordered_json;

struct Opts {
  unsigned q = 2;
  int n = 0, k = 0, d = -1, t = 1, h = 4;
  std::uint64_t trials = 0, seed = 0, budget = 0;
  int workers = 0;
  double alpha = 0.25;
  int dim_bonus = 0;
  std::string format = "csv";
  int digits = kDefaultDigits;
  std::string mode = "subspaces", model = "independent", method = "exact", tail = "none";
  double tail_bound = 0.0, shift_constant = 0.0;
  std::string moments;
  bool no_condition = false;
  std::string save_manifest, manifest;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Result {
  json result;
  Table table;
  std::optional<std::string> rational, decimal;
  std::string regime = "exact";
  int digits = 0;  // 0: no high-precision evaluation involved
};

std::string g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string str(const mpq_class& x) { return x.get_str(); }
std::string str(const mpz_class& x) { return x.get_str(); }
std::string str(long long x) { return std::to_string(x); }

std::string high(const mpq_class& x, int digits) { return Real(x, bits_for_digits(digits)).to_string(digits); }

void require(bool cond, const std::string& what) {
  if (!cond) throw ParameterError(what);
}

void require_nkd(const Opts& o, bool need_k, bool need_d) {
  require(o.n >= 1, "--n must be >= 1");
  if (need_k) {
    require(o.k >= 1, "--k must be >= 1");
    require(o.k <= o.n, "--k must not exceed --n");
  }
  if (need_d) {
    require(o.d >= 0, "--d is required");
    require(o.d <= o.n, "--d must not exceed --n");
  }
}

json cdf_rows_json(const CdfTable& t) {
  json rows = json::array();
  for (int d = 0; d <= t.n; ++d) {
    json r = {{"d", d}};
    if (t.entries[d].exact) r["cdf"] = str(*t.entries[d].exact);
    r["cdf_decimal"] = t.entries[d].value;
    if (t.provenance == Provenance::monte_carlo) r["stderr"] = t.entries[d].stderr_;
    rows.push_back(r);
  }
  return rows;
}

Table exact_cdf_table(const CdfTable& t) {
  Table tab{{"d", "cdf_rational", "cdf_decimal"}, {}};
  for (int d = 0; d <= t.n; ++d) tab.rows.push_back({str(d), str(*t.entries[d].exact), g12(t.entries[d].value)});
  return tab;
}

// ---- commands -------------------------------------------------------------

Result cmd_rho(const Opts& o) {
  require_nkd(o, false, true);
  const auto r = rho(o.q, o.n, o.d);
  Result res;
  res.digits = o.digits;
  res.rational = r.to_string();
  res.decimal = high(r.value(), o.digits);
  res.result = {{"q", o.q}, {"n", o.n}, {"d", o.d}, {"rho", *res.rational}, {"rho_decimal", *res.decimal}};
  res.table = {{"q", "n", "d", "rho_rational", "rho_decimal"},
               {{str(o.q), str(o.n), str(o.d), *res.rational, g12(r.to_double())}}};
  return res;
}

Result cmd_wmin(const Opts& o) {
  require_nkd(o, true, false);
  Result res;
  res.digits = o.digits;
  const WminOptions wo{o.digits, kExactClassLimit};
  const int lo = o.d >= 0 ? o.d : 0, hi = o.d >= 0 ? o.d : o.n;
  require(hi <= o.n, "--d must not exceed --n");
  json rows = json::array();
  bool exact = true;
  for (int d = lo; d <= hi; ++d) {
    const auto v = wmin_cdf(o.q, o.n, o.k, d, wo);
    exact = v.regime == Regime::exact;
    json r = {{"d", d}};
    if (v.exact) r["cdf"] = v.exact->to_string();
    r["cdf_decimal"] = v.cdf.to_string(o.digits);
    r["log_survival"] = v.log_survival.to_string(o.digits);
    rows.push_back(r);
    if (exact)
      res.table.rows.push_back({str(d), v.exact->to_string(), g12(v.cdf.to_double())});
    else
      res.table.rows.push_back({str(d), g12(v.cdf.to_double()), g12(v.log_survival.to_double())});
    if (o.d >= 0) {
      if (v.exact) res.rational = v.exact->to_string();
      res.decimal = v.cdf.to_string(o.digits);
    }
  }
  res.regime = exact ? "exact" : "log-domain";
  res.table.header = exact ? std::vector<std::string>{"d", "cdf_rational", "cdf_decimal"}
                           : std::vector<std::string>{"d", "cdf_decimal", "log_survival"};
  res.result = {{"q", o.q}, {"n", o.n}, {"k", o.k}, {"classes", str(class_count(o.q, o.k))},
                {"regime", res.regime}, {"rows", rows}};
  return res;
}

Result cmd_gumbel(const Opts& o) {
  require_nkd(o, true, false);
  const auto g = gumbel_params(o.q, o.n, o.k, o.digits);
  Result res;
  res.digits = std::max(o.digits, 50);
  res.result = {{"q", o.q}, {"n", o.n}, {"k", o.k}, {"d0", g.d0}, {"u", str(g.u)}, {"log_u", g.log_u.to_string(o.digits)}};
  res.result["slope"] = g.slope ? json(g.slope->to_string(o.digits)) : json(nullptr);
  std::string sup = "", argmax = "", points = "";
  try {
    const auto s = gumbel_sup_distance(o.q, o.n, o.k, o.digits);
    res.result["sup"] = s.sup.to_string(o.digits);
    res.result["argmax_z"] = s.argmax_z;
    res.result["points"] = s.points;
    sup = g12(s.sup.to_double());
    argmax = str(s.argmax_z);
    points = str(s.points);
  } catch (const ParameterError& e) {
    res.result["sup"] = nullptr;
    res.result["note"] = e.what();
  }
  res.table = {{"d0", "u", "slope", "sup", "argmax_z", "points"},
               {{str(g.d0), str(g.u), g.slope ? g12(g.slope->to_double()) : "", sup, argmax, points}}};
  return res;
}

SamplerConfig sampler(const Opts& o) {
  SamplerConfig c;
  c.q = o.q;
  c.n = o.n;
  c.k = o.k;
  c.condition_full_rank = !o.no_condition;
  c.master_seed = o.seed;
  c.trials = o.trials;
  c.workers = o.workers;
  if (o.budget) c.budget = o.budget;
  return c;
}

Result cmd_sample(const Opts& o) {
  require_nkd(o, true, false);
  const auto e = sample_dmin(sampler(o));
  const auto t = e.table();
  Result res;
  res.regime = "monte-carlo";
  json counts = json::array();
  for (auto c : e.counts) counts.push_back(c);
  res.result = {{"q", o.q},          {"n", o.n},         {"k", o.k},
                {"trials", e.trials}, {"seed", e.master_seed}, {"conditioned", !o.no_condition},
                {"counts", counts},   {"redraws", e.redraws},   {"codewords_visited", e.codewords_visited},
                {"rows", cdf_rows_json(t)}};
  res.table.header = {"d", "cdf", "stderr", "trials"};
  for (int d = 0; d <= o.n; ++d)
    res.table.rows.push_back({str(d), g12(t.entries[d].value), g12(t.entries[d].stderr_), str(static_cast<long long>(e.trials))});
  return res;
}

Result cmd_exact_dmin(const Opts& o) {
  require_nkd(o, true, false);
  require(o.mode == "matrices" || o.mode == "subspaces", "--mode must be matrices or subspaces");
  const auto mode = o.mode == "matrices" ? CodeLawMode::all_matrices : CodeLawMode::all_subspaces;
  const auto law = enumerate_code_law(o.q, o.n, o.k, mode, o.budget);
  const auto t = law.table();
  Result res;
  json counts = json::array();
  for (const auto& c : law.counts) counts.push_back(str(c));
  res.result = {{"q", o.q}, {"n", o.n}, {"k", o.k}, {"mode", o.mode}, {"total", str(law.total)},
                {"counts", counts}, {"rows", cdf_rows_json(t)}};
  res.table = exact_cdf_table(t);
  return res;
}

Result cmd_compare(const Opts& o) {
  require_nkd(o, true, false);
  require(o.method == "exact" || o.method == "monte-carlo", "--method must be exact or monte-carlo");
  const auto rep = o.method == "exact" ? compare_cdfs_exact(o.q, o.n, o.k, o.budget) : compare_cdfs(sampler(o));
  Result res;
  res.regime = o.method;
  json rows = json::array();
  res.table.header = {"d", "empirical", "stderr", "wmin", "diff", "qk_rho", "d2_n32", "d4_n3"};
  for (const auto& r : rep.rows) {
    rows.push_back({{"d", r.d}, {"empirical", r.empirical}, {"stderr", r.stderr_}, {"wmin", r.wmin}, {"diff", r.diff},
                    {"qk_rho", r.qk_rho}, {"d2_n32", r.d2_n32}, {"d4_n3", r.d4_n3}});
    res.table.rows.push_back({str(r.d), g12(r.empirical), g12(r.stderr_), g12(r.wmin), g12(r.diff), g12(r.qk_rho),
                              g12(r.d2_n32), g12(r.d4_n3)});
  }
  res.result = {{"q", o.q}, {"n", o.n}, {"k", o.k}, {"source", to_string(rep.source)}};
  if (rep.source == Provenance::monte_carlo) {
    res.result["trials"] = rep.trials;
    res.result["seed"] = rep.seed;
  }
  res.result["sup"] = rep.sup;
  res.result["argmax_d"] = rep.argmax_d;
  res.result["exact_sup"] = rep.exact_sup ? json(str(*rep.exact_sup)) : json(nullptr);
  res.result["rows"] = rows;
  return res;
}

MomentVector moment_vector(const Opts& o, int orders) {
  if (!o.moments.empty()) {
    std::vector<mpq_class> vals;
    std::stringstream ss(o.moments);
    std::string item;
    while (std::getline(ss, item, ',')) {
      mpq_class v;
      if (v.set_str(item, 10) != 0) throw ParameterError("bad rational in --moments: " + item);
      v.canonicalize();
      vals.push_back(v);
    }
    return MomentVector::from_exact(std::move(vals), MomentModel::code);
  }
  require_nkd(o, true, true);
  require(o.model == "independent" || o.model == "code", "--model must be independent or code");
  if (o.model == "independent") return ztilde_moments(o.q, o.n, o.k, o.d, orders);
  require(o.method == "exact" || o.method == "monte-carlo", "--method must be exact or monte-carlo");
  ZMomentConfig c;
  c.q = o.q;
  c.n = o.n;
  c.k = o.k;
  c.d = o.d;
  c.h = orders;
  c.method = o.method == "exact" ? ZMethod::exact_tiny : ZMethod::monte_carlo;
  c.trials = o.trials;
  c.seed = o.seed;
  c.workers = o.workers;
  c.budget = o.budget;
  return z_moments(c);
}

Result cmd_moments(const Opts& o) {
  require(o.h >= 1, "--max-order must be >= 1");
  const auto mv = moment_vector(o, o.h);
  Result res;
  res.regime = to_string(mv.source);
  json rows = json::array();
  if (mv.exact) {
    res.table.header = {"m", "moment_rational", "moment_decimal"};
    for (int m = 1; m <= mv.h; ++m) {
      rows.push_back({{"m", m}, {"moment", str((*mv.exact)[m - 1])}, {"moment_decimal", mv.value[m - 1]}});
      res.table.rows.push_back({str(m), str((*mv.exact)[m - 1]), g12(mv.value[m - 1])});
    }
  } else {
    res.table.header = {"m", "moment", "stderr", "trials"};
    for (int m = 1; m <= mv.h; ++m) {
      rows.push_back({{"m", m}, {"moment", mv.value[m - 1]}, {"stderr", mv.stderr_[m - 1]}});
      res.table.rows.push_back({str(m), g12(mv.value[m - 1]), g12(mv.stderr_[m - 1]), str(static_cast<long long>(mv.trials))});
    }
  }
  res.result = {{"model", mv.model == MomentModel::independent ? "independent" : "code"},
                {"source", to_string(mv.source)}, {"rows", rows}};
  return res;
}

Result cmd_invert(const Opts& o) {
  require(o.h >= 1, "--h must be >= 1");
  TailSpec tail;
  if (o.tail == "markov") tail.kind = TailSpec::Kind::markov;
  else if (o.tail == "bound") tail = {TailSpec::Kind::bound, o.tail_bound};
  else require(o.tail == "none", "--tail must be none, bound or markov");
  const int orders = o.h + (tail.kind == TailSpec::Kind::markov ? 1 : 0);
  const auto mv = moment_vector(o, orders);
  const auto mass = invert_moments(mv, o.h, tail);
  Result res;
  res.regime = to_string(mv.source);
  res.table.header = {"r", "mass", "err_bound"};
  json rows = json::array();
  for (int r = 1; r <= o.h; ++r) {
    json row = {{"r", r}};
    if (mass.exact) row["mass_rational"] = str((*mass.exact)[r - 1]);
    row["mass"] = mass.mass[r - 1];
    row["stderr"] = mass.stderr_[r - 1];
    row["err_bound"] = mass.err_bound[r - 1];
    row["clipped"] = mass.clipped[r - 1];
    rows.push_back(row);
    res.table.rows.push_back({str(r), mass.exact ? str((*mass.exact)[r - 1]) : g12(mass.mass[r - 1]),
                              g12(mass.err_bound[r - 1])});
  }
  res.result = {{"h", o.h}, {"tail", o.tail}, {"tail_t", mass.tail_t}, {"rows", rows}};
  if (tail.kind == TailSpec::Kind::markov)
    res.result["note"] = "tail mass from the Markov surrogate E[Z^(h+1)]/(h+1)^(h+1)";
  return res;
}

Result cmd_gv(const Opts& o) {
  require(o.d >= 0, "--d is required");
  const auto r = gv_improved(o.q, o.n, o.d, o.alpha, o.shift_constant);
  Result res;
  res.result = {{"q", o.q},
                {"n", o.n},
                {"d", o.d},
                {"classical_size", str(r.classical_size)},
                {"classical_dimension", r.classical_dimension},
                {"improved_size_core", str(r.improved_size_core)},
                {"sqrt_factor", r.sqrt_factor},
                {"entropy_rate", r.entropy_rate ? json(*r.entropy_rate) : json(nullptr)},
                {"alpha", o.alpha},
                {"in_window", r.in_window},
                {"window", {r.window_low, r.window_high}},
                {"shift_constant", o.shift_constant},
                {"dimension_shift", *r.dimension_shift}};
  if (!r.warning.empty()) res.result["warning"] = r.warning;
  res.table = {{"q", "n", "d", "classical_size", "classical_dimension", "improved_size_core", "sqrt_factor",
                "entropy_rate", "in_window", "dimension_shift"},
               {{str(o.q), str(o.n), str(o.d), str(r.classical_size), str(r.classical_dimension),
                 str(r.improved_size_core), g12(r.sqrt_factor), r.entropy_rate ? g12(*r.entropy_rate) : "",
                 r.in_window ? "true" : "false", str(*r.dimension_shift)}}};
  return res;
}

Result cmd_gv_experiment(const Opts& o) {
  GvExperimentConfig c;
  c.q = o.q;
  c.n = o.n;
  c.alpha = o.alpha;
  c.dim_bonus = o.dim_bonus;
  if (o.d >= 0) c.d = o.d;
  c.trials = o.trials;
  c.seed = o.seed;
  c.workers = o.workers;
  if (o.budget) c.budget = o.budget;
  const auto r = gv_experiment(c);
  Result res;
  res.regime = "monte-carlo";
  res.result = {{"q", r.q},
                {"n", r.n},
                {"d", r.d},
                {"alpha", r.alpha},
                {"k_gv", r.k_gv},
                {"dim_bonus", r.dim_bonus},
                {"k", r.k},
                {"trials", r.trials},
                {"seed", r.seed},
                {"success_count", r.success_count},
                {"success_rate", r.success_rate},
                {"stderr", r.stderr_},
                {"surrogate", r.surrogate},
                {"exp_minus_sqrt_n", r.reference},
                {"codewords_visited", r.codewords_visited}};
  res.table = {{"d", "k_gv", "k", "trials", "success_count", "success_rate", "stderr", "surrogate", "exp_minus_sqrt_n"},
               {{str(r.d), str(r.k_gv), str(r.k), str(static_cast<long long>(r.trials)),
                 str(static_cast<long long>(r.success_count)), g12(r.success_rate), g12(r.stderr_), g12(r.surrogate),
                 g12(r.reference)}}};
  return res;
}

// ---- plumbing -------------------------------------------------------------

json collect_params(const CLI::App* sub) {
  json p = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "save-manifest" || name == "manifest") continue;
    if (opt->get_expected_min() == 0) {
      p[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      p[name] = opt->results().back();
    } else if (!opt->get_default_str().empty()) {
      p[name] = opt->get_default_str();
    }
  }
  return p;
}

void emit(const Result& r, const json& manifest, const std::string& format, std::ostream& out, std::ostream& err) {
  if (format == "json") {
    out << json{{"manifest", manifest}, {"result", r.result}}.dump(2) << '\n';
  } else if (format == "csv") {
    out << "# manifest " << manifest.dump() << '\n';
    for (std::size_t i = 0; i < r.table.header.size(); ++i) out << (i ? "," : "") << r.table.header[i];
    out << '\n';
    for (const auto& row : r.table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
  } else {
    const auto& v = format == "rational" ? r.rational : r.decimal;
    if (!v) throw ParameterError("--format " + format + " needs a single " + format + " value (give --d)");
    err << "# manifest " << manifest.dump() << '\n';
    out << *v << '\n';
  }
}

struct Command {
  const char* name;
  const char* help;
  std::vector<std::string> flags;
  std::function<Result(const Opts&)> fn;
};

std::vector<Command> commands() {
  const std::vector<std::string> sampling = {"trials", "seed", "workers", "budget"};
  auto with = [](std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  return {
      {"rho", "weight tail probability rho_d", {"q", "n", "d", "digits"}, cmd_rho},
      {"wmin-cdf", "c.d.f. of the minimum weight in the independent model", {"q", "n", "k", "d", "digits"}, cmd_wmin},
      {"gumbel", "Gumbel normalization and sup distance", {"q", "n", "k", "digits"}, cmd_gumbel},
      {"sample-dmin", "Monte-Carlo law of d_min", with({"q", "n", "k", "no-condition"}, sampling), cmd_sample},
      {"exact-dmin", "exhaustive law of d_min", {"q", "n", "k", "mode", "budget"}, cmd_exact_dmin},
      {"compare", "d_min law against the minimum-weight law", with({"q", "n", "k", "method"}, sampling), cmd_compare},
      {"moments", "moments of Z_d (independent or code model)",
       with({"q", "n", "k", "d", "max-order", "model", "method", "moments"}, sampling), cmd_moments},
      {"invert-moments", "masses from moments",
       with({"q", "n", "k", "d", "h", "model", "method", "moments", "tail", "tail-bound"}, sampling), cmd_invert},
      {"gv", "Gilbert-Varshamov calculators", {"q", "n", "d", "alpha", "shift-constant"}, cmd_gv},
      {"gv-experiment", "random codes above the GV dimension",
       with({"q", "n", "d", "alpha", "dim-bonus"}, sampling), cmd_gv_experiment},
  };
}

void add_flag(CLI::App* s, const std::string& f, Opts& o) {
  if (f == "q") s->add_option("--q", o.q, "field order (prime power)")->capture_default_str();
  else if (f == "n") s->add_option("--n", o.n, "code length");
  else if (f == "k") s->add_option("--k", o.k, "dimension");
  else if (f == "d") s->add_option("--d", o.d, "distance / weight threshold");
  else if (f == "t") s->add_option("--t", o.t, "truncation length")->capture_default_str();
  else if (f == "h") s->add_option("--h", o.h, "number of masses")->capture_default_str();
  else if (f == "max-order") s->add_option("--m,--max-order", o.h, "highest moment order")->capture_default_str();
  else if (f == "trials") s->add_option("--trials", o.trials, "Monte-Carlo trials")->capture_default_str();
  else if (f == "seed") s->add_option("--seed", o.seed, "master seed")->capture_default_str();
  else if (f == "workers") s->add_option("--workers", o.workers, "worker threads (default $RLC_WORKERS)");
  else if (f == "budget") s->add_option("--budget", o.budget, "visit / enumeration cap (0: default)")->capture_default_str();
  else if (f == "alpha") s->add_option("--alpha", o.alpha, "window parameter")->capture_default_str();
  else if (f == "dim-bonus") s->add_option("--dim-bonus", o.dim_bonus, "dimensions above k_GV")->capture_default_str();
  else if (f == "digits") s->add_option("--digits", o.digits, "decimal digits")->capture_default_str()->check(CLI::Range(10, 10000));
  else if (f == "mode") s->add_option("--mode", o.mode, "matrices | subspaces")->capture_default_str();
  else if (f == "model") s->add_option("--model", o.model, "independent | code")->capture_default_str();
  else if (f == "method") s->add_option("--method", o.method, "exact | monte-carlo")->capture_default_str();
  else if (f == "moments") s->add_option("--moments", o.moments, "comma-separated rationals E[Z^1],...");
  else if (f == "tail") s->add_option("--tail", o.tail, "none | bound | markov")->capture_default_str();
  else if (f == "tail-bound") s->add_option("--tail-bound", o.tail_bound, "T for --tail bound")->capture_default_str();
  else if (f == "shift-constant") s->add_option("--shift-constant", o.shift_constant, "C in the dimension shift")->capture_default_str();
  else if (f == "no-condition") s->add_flag("--no-condition", o.no_condition, "keep rank-deficient draws");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int replay(const Opts& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.manifest);
  if (!in) throw ParameterError("cannot read manifest " + o.manifest);
  json m;
  try {
    in >> m;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed manifest: ") + e.what());
  }
  if (m.contains("manifest")) m = m["manifest"];
  if (m.value("tool", "") != kToolName) throw ParameterError("not a " + std::string(kToolName) + " manifest");
  if (m.value("version", "") != kVersion) {
    err << "error: manifest from version " << m.value("version", "?") << ", this is " << kVersion << '\n';
    return version_mismatch;
  }
  std::vector<std::string> args{m.at("command").get<std::string>()};
  for (const auto& [key, value] : m.at("params").items()) {
    if (key == "workers" && o.workers > 0) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
    } else {
      args.push_back("--" + key);
      args.push_back(value.get<std::string>());
    }
  }
  if (o.workers > 0) {
    args.push_back("--workers");
    args.push_back(std::to_string(o.workers));
  }
  return dispatch(args, out, err);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum distance of random linear codes", kToolName};
  app.set_help_flag("--help", "print help");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Opts o;
  std::string format = "csv";
  const auto cmds = commands();
  for (const auto& c : cmds) {
    auto* s = app.add_subcommand(c.name, c.help);
    s->add_option("--format", format, "csv | json | rational | decimal")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json", "rational", "decimal"}));
    for (const auto& f : c.flags) add_flag(s, f, o);
    s->add_option("--save-manifest", o.save_manifest, "also write the manifest to this file");
  }
  auto* rp = app.add_subcommand("replay", "re-run a saved manifest");
  rp->add_option("--manifest", o.manifest, "manifest file")->required();
  rp->add_option("--workers", o.workers, "override the worker count");

  std::vector<std::string> argv{kToolName};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<const char*> ptrs;
  for (const auto& a : argv) ptrs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : parameter_error;
  }

  if (rp->parsed()) return replay(o, out, err);
  for (const auto& c : cmds) {
    const auto* s = app.get_subcommand(c.name);
    if (!s->parsed()) continue;
    Field::of_order(o.q);  // rejects q that is not a prime power
    const auto start = std::chrono::steady_clock::now();
    const Result r = c.fn(o);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json params = collect_params(s);
    json manifest = {{"tool", kToolName},
                     {"version", kVersion},
                     {"csv_schema", kCsvSchemaVersion},
                     {"command", c.name},
                     {"params", params},
                     {"seed", o.seed},
                     {"workers", resolve_workers(o.workers)},
                     {"wall_time_s", wall},
                     {"regime", r.regime}};
    if (r.digits) manifest["digits"] = r.digits;
    emit(r, manifest, format, out, err);
    if (!o.save_manifest.empty()) {
      std::ofstream f(o.save_manifest);
      if (!f) throw ParameterError("cannot write manifest " + o.save_manifest);
      f << manifest.dump(2) << '\n';
    }
    return ok;
  }
  return failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return parameter_error;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return budget_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
}

}  // namespace rlc::cli
