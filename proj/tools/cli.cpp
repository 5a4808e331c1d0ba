#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "kgyukawa/kg_yukawa.hpp"
#include "kgyukawa/limits.hpp"
#include "kgyukawa/oracle.hpp"
#include "kgyukawa/potentials.hpp"

namespace kgy::cli {
namespace {

using nlohmann::json;

enum class Format { Csv, Json };

struct RunConfig {
  std::optional<double> v0, s0, beta, a, mass, tolerance;
  std::optional<int> n, l, dim, scan_points, threads;
  std::optional<std::string> n_range, l_range, dim_range, format, out;
  // command specific
  std::optional<int> points, steps;
  std::optional<double> r_min, r_max, max_diff;
  std::optional<std::string> mode;
  std::string config;
};

struct StateRanges {
  IntRange n, l, d;
};

// --- formatting ------------------------------------------------------------

std::string format_fixed(double x, int decimals) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, decimals);
  if (ec != std::errc{}) throw NonFinite("value does not fit the output buffer");
  return {buf, end};
}

std::string energy_str(double e) { return format_fixed(e, 8); }

std::string sig_str(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 8);
  if (ec != std::errc{}) throw NonFinite("value does not fit the output buffer");
  return {buf, end};
}

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) : width_(header.size()) { row(std::move(header)); }
  void row(std::vector<std::string> cells) {
    if (cells.size() != width_) throw InvalidArgument("csv row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text_ += ',';
      text_ += cells[i];
    }
    text_ += '\n';
  }
  const std::string& str() const { return text_; }

 private:
  std::size_t width_;
  std::string text_;
};

std::string status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoRootInBracket: return "no_bound_state";
    case ErrorKind::ComplexChannel: return "complex_channel";
    case ErrorKind::NegativeDiscriminant: return "negative_discriminant";
    case ErrorKind::ConstraintViolation: return "constraint_violation";
    case ErrorKind::OutOfDomain: return "out_of_domain";
    default: return "numeric_failure";
  }
}

int exit_code_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::DomainError: return kInvalidInput;
    case ErrorKind::NegativeDiscriminant:
    case ErrorKind::ConstraintViolation:
    case ErrorKind::ComplexChannel:
    case ErrorKind::NoRootInBracket:
    case ErrorKind::OutOfDomain: return kPhysicsError;
    case ErrorKind::NonFinite:
    case ErrorKind::NormalizationFailure:
    case ErrorKind::ConvergenceFailure: return kNumericFailure;
  }
  return kNumericFailure;
}

// --- config ----------------------------------------------------------------

template <class T>
void take(const json& doc, const char* key, std::optional<T>& slot) {
  if (slot || !doc.contains(key)) return;
  const auto& v = doc.at(key);
  if constexpr (std::is_same_v<T, std::string>) {
    if (v.is_string()) {
      slot = v.get<std::string>();
    } else if (v.is_number_integer()) {
      slot = std::to_string(v.get<long long>());
    } else if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
      slot = std::to_string(v[0].get<long long>()) + ":" + std::to_string(v[1].get<long long>());
    } else {
      throw InvalidArgument(std::string("config key '") + key + "' has the wrong type");
    }
  } else if constexpr (std::is_same_v<T, int>) {
    if (!v.is_number_integer()) throw InvalidArgument(std::string("config key '") + key + "' must be an integer");
    slot = v.get<int>();
  } else {
    if (!v.is_number()) throw InvalidArgument(std::string("config key '") + key + "' must be a number");
    slot = v.get<double>();
  }
}

void merge_config_file(RunConfig& cfg) {
  if (cfg.config.empty()) return;
  std::ifstream in(cfg.config);
  if (!in) throw InvalidArgument("cannot open config file '" + cfg.config + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw InvalidArgument("config file must hold a JSON object");

  static const std::vector<std::string> known = {
      "v0",     "s0",      "beta",      "a",         "mass",  "tolerance", "n",     "l",     "dim",
      "scan-points", "threads", "n-range", "l-range", "dim-range", "format", "out", "points", "steps",
      "r-min",  "r-max",   "max-diff",  "mode"};
  for (const auto& [key, _] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw InvalidArgument("unknown config key '" + key + "'");
    }
  }
  take(doc, "v0", cfg.v0);
  take(doc, "s0", cfg.s0);
  take(doc, "beta", cfg.beta);
  take(doc, "a", cfg.a);
  take(doc, "mass", cfg.mass);
  take(doc, "tolerance", cfg.tolerance);
  take(doc, "n", cfg.n);
  take(doc, "l", cfg.l);
  take(doc, "dim", cfg.dim);
  take(doc, "scan-points", cfg.scan_points);
  take(doc, "threads", cfg.threads);
  take(doc, "n-range", cfg.n_range);
  take(doc, "l-range", cfg.l_range);
  take(doc, "dim-range", cfg.dim_range);
  take(doc, "format", cfg.format);
  take(doc, "out", cfg.out);
  take(doc, "points", cfg.points);
  take(doc, "steps", cfg.steps);
  take(doc, "r-min", cfg.r_min);
  take(doc, "r-max", cfg.r_max);
  take(doc, "max-diff", cfg.max_diff);
  take(doc, "mode", cfg.mode);
}

// --- resolution --------------------------------------------------------------

double required(const std::optional<double>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string("missing --") + flag);
  return require_finite(*v, flag);
}

PotentialParams potential_of(const RunConfig& cfg) {
  const double v0 = required(cfg.v0, "v0");
  const double a = required(cfg.a, "a");
  if (cfg.s0.has_value() == cfg.beta.has_value()) {
    throw InvalidArgument("give exactly one of --s0 and --beta");
  }
  PotentialParams pp = cfg.s0 ? PotentialParams{v0, require_finite(*cfg.s0, "s0"), a}
                              : PotentialParams::from_beta(v0, require_finite(*cfg.beta, "beta"), a);
  pp.validate();
  return pp;
}

ParticleParams particle_of(const RunConfig& cfg) {
  ParticleParams mp{cfg.mass.value_or(1.0)};
  mp.validate();
  return mp;
}

QuantumNumbers state_of(const RunConfig& cfg) {
  QuantumNumbers qn{cfg.n.value_or(1), cfg.l.value_or(0), cfg.dim.value_or(3)};
  qn.validate();
  return qn;
}

IntRange parse_range(const std::string& text, const char* flag) {
  const auto bad = [&] { return InvalidArgument(std::string("--") + flag + " expects FIRST:LAST, got '" + text + "'"); };
  const auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw bad();
    return v;
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  IntRange r{parse_int(std::string_view(text).substr(0, colon)), parse_int(std::string_view(text).substr(colon + 1))};
  if (r.empty()) throw bad();
  return r;
}

StateRanges ranges_of(const RunConfig& cfg) {
  const auto pick = [](const std::optional<std::string>& range, const std::optional<int>& single, int fallback,
                       const char* flag) {
    if (range) return parse_range(*range, flag);
    const int v = single.value_or(fallback);
    return IntRange{v, v};
  };
  StateRanges s{pick(cfg.n_range, cfg.n, 1, "n-range"), pick(cfg.l_range, cfg.l, 0, "l-range"),
                pick(cfg.dim_range, cfg.dim, 3, "dim-range")};
  QuantumNumbers{s.n.first, s.l.first, s.d.first}.validate();
  if (static_cast<long long>(s.n.size()) * s.l.size() * s.d.size() > 1000000) {
    throw InvalidArgument("state ranges span more than 10^6 states");
  }
  return s;
}

// States with l < n, ordered by D, then n, then l.
std::vector<QuantumNumbers> states_of(const StateRanges& s) {
  std::vector<QuantumNumbers> states;
  for (int d = s.d.first; d <= s.d.last; ++d)
    for (int n = s.n.first; n <= s.n.last; ++n)
      for (int l = s.l.first; l <= s.l.last && l < n; ++l) states.push_back({n, l, d});
  return states;
}

SolverOptions solver_of(const RunConfig& cfg) {
  SolverOptions opts;
  if (cfg.tolerance) opts.tolerance = *cfg.tolerance;
  if (cfg.scan_points) opts.scan_points = *cfg.scan_points;
  opts.validate();
  return opts;
}

int threads_of(const RunConfig& cfg) {
  if (cfg.threads) {
    if (*cfg.threads < 1) throw InvalidArgument("--threads must be >= 1");
    return *cfg.threads;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Format format_of(const RunConfig& cfg) {
  const std::string f = cfg.format.value_or("csv");
  if (f == "csv") return Format::Csv;
  if (f == "json") return Format::Json;
  throw InvalidArgument("--format must be csv or json, got '" + f + "'");
}

json state_json(const QuantumNumbers& qn) { return {{"dim", qn.d}, {"n", qn.n}, {"l", qn.l}}; }

std::vector<std::string> state_cells(const QuantumNumbers& qn) {
  return {std::to_string(qn.d), std::to_string(qn.n), std::to_string(qn.l)};
}

// Each command validates, computes, then returns the full document.
struct Output {
  std::string text;
  int code = kOk;
};

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

// --- commands ----------------------------------------------------------------

Output cmd_solve(const RunConfig& cfg, std::ostream&) {
  const auto pp = potential_of(cfg);
  const auto mp = particle_of(cfg);
  const auto qn = state_of(cfg);
  const auto opts = solver_of(cfg);
  const auto fmt = format_of(cfg);

  const auto sol = solve_energy(pp, mp, qn, opts);
  if (fmt == Format::Json) {
    json doc = state_json(qn);
    doc.update({{"energy", sol.energy},
                {"epsilon", sol.epsilon},
                {"residual", sol.residual},
                {"iterations", sol.iterations}});
    return {dump(doc)};
  }
  Csv csv({"dim", "n", "l", "energy", "epsilon", "residual", "iterations"});
  auto cells = state_cells(qn);
  cells.insert(cells.end(),
               {energy_str(sol.energy), sig_str(sol.epsilon), sig_str(sol.residual), std::to_string(sol.iterations)});
  csv.row(std::move(cells));
  return {csv.str()};
}

Output cmd_table(const RunConfig& cfg, std::ostream&) {
  const auto pp = potential_of(cfg);
  const auto mp = particle_of(cfg);
  const auto ranges = ranges_of(cfg);
  const auto opts = solver_of(cfg);
  const int threads = threads_of(cfg);
  const auto fmt = format_of(cfg);

  const auto table = solve_table(pp, mp, ranges.n, ranges.l, ranges.d, opts, threads);
  const auto states = states_of(ranges);

  json rows = json::array();
  Csv csv({"dim", "n", "l", "energy", "residual", "status"});
  for (const auto& qn : states) {
    const EnergyCell* cell = table.find(qn);
    auto cells = state_cells(qn);
    json row = state_json(qn);
    if (cell->solution) {
      cells.insert(cells.end(), {energy_str(cell->solution->energy), sig_str(cell->solution->residual), "ok"});
      row.update({{"energy", cell->solution->energy}, {"residual", cell->solution->residual}, {"status", "ok"}});
    } else {
      const auto status = status_of(*cell->error);
      cells.insert(cells.end(), {"", "", status});
      row.update({{"energy", nullptr}, {"residual", nullptr}, {"status", status}, {"message", cell->message}});
    }
    csv.row(std::move(cells));
    rows.push_back(std::move(row));
  }
  return {fmt == Format::Json ? dump(rows) : csv.str()};
}

Output cmd_degeneracy(const RunConfig& cfg, std::ostream& err) {
  const auto pp = potential_of(cfg);
  const auto mp = particle_of(cfg);
  const auto ranges = ranges_of(cfg);
  const auto opts = solver_of(cfg);
  const int threads = threads_of(cfg);
  const auto fmt = format_of(cfg);
  const double max_diff = cfg.max_diff.value_or(1e-10);
  if (!(max_diff >= 0)) throw InvalidArgument("--max-diff must be >= 0");

  struct Pair {
    QuantumNumbers state, partner;
  };
  std::vector<Pair> pairs;
  for (const auto& qn : states_of(ranges)) {
    for (auto dir : {Direction::Up, Direction::Down}) {
      try {
        const auto partner = degeneracy_partner(qn, dir);
        if (partner.l < partner.n) pairs.push_back({qn, partner});
      } catch (const OutOfDomain&) {
      }
    }
  }
  // Partners can leave the requested ranges; widen once and solve everything together.
  IntRange l_all = ranges.l, d_all = ranges.d;
  for (const auto& p : pairs) {
    l_all = {std::min(l_all.first, p.partner.l), std::max(l_all.last, p.partner.l)};
    d_all = {std::min(d_all.first, p.partner.d), std::max(d_all.last, p.partner.d)};
  }
  const auto table = solve_table(pp, mp, ranges.n, l_all, d_all, opts, threads);

  double worst = 0.0;
  json rows = json::array();
  Csv csv({"dim", "n", "l", "partner_dim", "partner_n", "partner_l", "energy", "partner_energy", "abs_diff",
           "status"});
  for (const auto& [qn, partner] : pairs) {
    const auto* a = table.find(qn);
    const auto* b = table.find(partner);
    auto cells = state_cells(qn);
    for (auto& c : state_cells(partner)) cells.push_back(c);
    json row = state_json(qn);
    row["partner"] = state_json(partner);
    if (a->solution && b->solution) {
      const double diff = std::abs(a->solution->energy - b->solution->energy);
      worst = std::max(worst, diff);
      cells.insert(cells.end(),
                   {energy_str(a->solution->energy), energy_str(b->solution->energy), sig_str(diff), "ok"});
      row.update({{"energy", a->solution->energy},
                  {"partner_energy", b->solution->energy},
                  {"abs_diff", diff},
                  {"status", "ok"}});
    } else {
      const auto status = status_of(a->solution ? *b->error : *a->error);
      cells.insert(cells.end(), {a->solution ? energy_str(a->solution->energy) : "",
                                 b->solution ? energy_str(b->solution->energy) : "", "", status});
      row.update({{"status", status}});
    }
    csv.row(std::move(cells));
    rows.push_back(std::move(row));
  }
  const bool pass = worst <= max_diff;
  err << "max |dE| = " << sig_str(worst) << " over " << pairs.size() << " pairs ("
      << (pass ? "within" : "exceeds") << " " << sig_str(max_diff) << ")\n";
  Output o;
  o.text = fmt == Format::Json
               ? dump({{"pairs", rows}, {"max_abs_diff", worst}, {"max_diff", max_diff}, {"pass", pass}})
               : csv.str();
  o.code = pass ? kOk : kPhysicsError;
  return o;
}

Output cmd_wavefunction(const RunConfig& cfg, std::ostream& err) {
  const auto pp = potential_of(cfg);
  const auto mp = particle_of(cfg);
  const auto qn = state_of(cfg);
  const auto opts = solver_of(cfg);
  const auto fmt = format_of(cfg);
  const int points = cfg.points.value_or(4096);
  if (points < 16) throw InvalidArgument("--points must be >= 16");

  const auto sol = solve_energy(pp, mp, qn, opts);
  const auto wf = radial_wavefunction(sol, pp, mp, qn, default_wavefunction_grid(sol.epsilon, points));
  err << "energy " << energy_str(sol.energy) << ", norm " << sig_str(wf.norm) << ", nodes " << wf.nodes << "\n";
  if (fmt == Format::Json) {
    json doc = state_json(qn);
    doc.update({{"energy", sol.energy}, {"norm", wf.norm}, {"nodes", wf.nodes}, {"r", wf.r}, {"R", wf.values}});
    return {dump(doc)};
  }
  Csv csv({"r", "R"});
  for (std::size_t i = 0; i < wf.r.size(); ++i) csv.row({sig_str(wf.r[i]), sig_str(wf.values[i])});
  return {csv.str()};
}

Output cmd_potential(const RunConfig& cfg, std::ostream&) {
  const double strength = required(cfg.v0, "v0");
  const double a = required(cfg.a, "a");
  if (!(a > 0)) throw InvalidArgument("--a must be > 0");
  const double r_min = cfg.r_min.value_or(0.01 / a);
  const double r_max = cfg.r_max.value_or(10.0 / a);
  const int points = cfg.points.value_or(1000);
  const auto fmt = format_of(cfg);

  const auto prof = profile(strength, a, r_min, r_max, points);
  if (fmt == Format::Json) {
    json rows = json::array();
    for (const auto& row : prof.rows) {
      rows.push_back({{"r", row.r},
                      {"exact", row.exact},
                      {"approx", row.approx},
                      {"abs_err", row.abs_err},
                      {"rel_err", row.has_rel_err ? json(row.rel_err) : json(nullptr)}});
    }
    return {dump(rows)};
  }
  Csv csv({"r", "exact", "approx", "abs_err", "rel_err"});
  for (const auto& row : prof.rows) {
    csv.row({sig_str(row.r), sig_str(row.exact), sig_str(row.approx), sig_str(row.abs_err),
             row.has_rel_err ? sig_str(row.rel_err) : ""});
  }
  return {csv.str()};
}

Output cmd_oracle(const RunConfig& cfg, std::ostream&) {
  const auto pp = potential_of(cfg);
  const auto mp = particle_of(cfg);
  const auto ranges = ranges_of(cfg);
  const auto opts = solver_of(cfg);
  const auto fmt = format_of(cfg);
  const std::string mode = cfg.mode.value_or("both");
  std::vector<std::pair<std::string, PotentialMode>> modes;
  if (mode == "approximated" || mode == "both") modes.emplace_back("approximated", PotentialMode::Approximated);
  if (mode == "exact" || mode == "both") modes.emplace_back("exact", PotentialMode::Exact);
  if (modes.empty()) throw InvalidArgument("--mode must be approximated, exact or both");
  if (cfg.points && *cfg.points < 100) throw InvalidArgument("--points must be >= 100");

  json rows = json::array();
  Csv csv({"dim", "n", "l", "mode", "nu_energy", "oracle_energy", "fine_energy", "richardson", "grid_error",
           "nu_minus_oracle", "status"});
  for (const auto& qn : states_of(ranges)) {
    std::optional<EnergySolution> nu;
    try {
      nu = solve_energy(pp, mp, qn, opts);
    } catch (const NoRootInBracket&) {
    }
    RadialGrid grid = default_oracle_grid(nu ? nu->epsilon : mp.mass);
    if (cfg.r_min) grid.r_min = *cfg.r_min;
    if (cfg.r_max) grid.r_max = *cfg.r_max;
    if (cfg.points) grid.points = *cfg.points;
    grid.validate();
    OracleOptions oopts;
    if (nu) oopts.target = nu->energy;

    for (const auto& [name, m] : modes) {
      auto cells = state_cells(qn);
      cells.push_back(name);
      cells.push_back(nu ? energy_str(nu->energy) : "");
      json row = state_json(qn);
      row.update({{"mode", name}, {"nu_energy", nu ? json(nu->energy) : json(nullptr)}});
      try {
        const auto res = oracle_energy(pp, mp, qn, grid, m, oopts);
        cells.insert(cells.end(), {energy_str(res.energy), energy_str(res.fine_energy),
                                   energy_str(res.richardson_estimate), sig_str(res.grid_error),
                                   nu ? sig_str(nu->energy - res.richardson_estimate) : "", "ok"});
        row.update({{"oracle_energy", res.energy},
                    {"fine_energy", res.fine_energy},
                    {"richardson", res.richardson_estimate},
                    {"grid_error", res.grid_error},
                    {"nu_minus_oracle", nu ? json(nu->energy - res.richardson_estimate) : json(nullptr)},
                    {"status", "ok"}});
      } catch (const NoRootInBracket&) {
        cells.insert(cells.end(), {"", "", "", "", "", "no_bound_state"});
        row["status"] = "no_bound_state";
      }
      csv.row(std::move(cells));
      rows.push_back(std::move(row));
    }
  }
  return {fmt == Format::Json ? dump(rows) : csv.str()};
}

Output cmd_limits(const RunConfig& cfg, std::ostream& err) {
  const NonRelParams base{cfg.mass.value_or(1.0), required(cfg.v0, "v0"), required(cfg.a, "a")};
  base.validate();
  const auto qn = state_of(cfg);
  const auto opts = solver_of(cfg);
  const auto fmt = format_of(cfg);
  const int steps = cfg.steps.value_or(3);
  if (steps < 1 || steps > 30) throw InvalidArgument("--steps must be in [1, 30]");

  json rows = json::array();
  Csv csv({"step", "v0", "a", "nonrel_energy", "coulomb_energy", "relativistic_energy", "shifted_energy", "gap",
           "status"});
  std::vector<double> gaps;
  for (int k = 0; k < steps; ++k) {
    // a shrinks with v0 so the screening stays a fixed fraction of the coupling
    const double scale = std::ldexp(1.0, -k);
    const NonRelParams p{base.mu, base.v0 * scale, base.a * scale};
    const double nonrel = nonrel_energy(p, qn);
    const double coulomb = coulomb_energy(p, qn);
    std::vector<std::string> cells{std::to_string(k), sig_str(p.v0), sig_str(p.a), energy_str(nonrel),
                                   energy_str(coulomb)};
    json row{{"step", k}, {"v0", p.v0}, {"a", p.a}, {"nonrel_energy", nonrel}, {"coulomb_energy", coulomb}};
    if (p.a == 0.0) {
      cells.insert(cells.end(), {"", "", "", "unscreened"});
      row["status"] = "unscreened";
      csv.row(std::move(cells));
      rows.push_back(std::move(row));
      continue;
    }
    try {
      const auto pt = nonrel_limit_of_relativistic(std::span<const NonRelParams>(&p, 1), qn, opts).front();
      gaps.push_back(pt.gap);
      cells.insert(cells.end(), {energy_str(pt.relativistic_energy), energy_str(pt.shifted_energy),
                                 sig_str(pt.gap), "ok"});
      row.update({{"relativistic_energy", pt.relativistic_energy},
                  {"shifted_energy", pt.shifted_energy},
                  {"gap", pt.gap},
                  {"status", "ok"}});
    } catch (const NoRootInBracket&) {
      cells.insert(cells.end(), {"", "", "", "no_bound_state"});
      row["status"] = "no_bound_state";
    }
    csv.row(std::move(cells));
    rows.push_back(std::move(row));
  }
  const bool monotone = gaps.size() == static_cast<std::size_t>(steps) &&
                        std::adjacent_find(gaps.begin(), gaps.end(), std::less_equal<>()) == gaps.end();
  err << "gap shrinks monotonically: " << (monotone ? "yes" : "no") << "\n";
  return {fmt == Format::Json ? dump({{"points", rows}, {"monotone", monotone}}) : csv.str()};
}

// --- wiring ------------------------------------------------------------------

template <class T>
void opt(CLI::App* app, const std::string& name, std::optional<T>& slot, const std::string& help) {
  app->add_option_function<T>(name, [&slot](const T& v) { slot = v; }, help);
}

void add_common(CLI::App* app, RunConfig& cfg) {
  opt(app, "--v0", cfg.v0, "vector strength V0");
  opt(app, "--s0", cfg.s0, "scalar strength S0 (exclusive with --beta)");
  opt(app, "--beta", cfg.beta, "S0/V0 (exclusive with --s0)");
  opt(app, "--a", cfg.a, "screening parameter, fm^-1");
  opt(app, "--mass", cfg.mass, "particle mass, fm^-1 (default 1)");
  opt(app, "--n", cfg.n, "radial label n >= 1");
  opt(app, "--l", cfg.l, "angular momentum l");
  opt(app, "--dim", cfg.dim, "dimension D >= 2");
  opt(app, "--n-range", cfg.n_range, "FIRST:LAST");
  opt(app, "--l-range", cfg.l_range, "FIRST:LAST");
  opt(app, "--dim-range", cfg.dim_range, "FIRST:LAST");
  opt(app, "--format", cfg.format, "csv or json");
  opt(app, "--out", cfg.out, "write output to PATH");
  opt(app, "--tolerance", cfg.tolerance, "bisection tolerance on E");
  opt(app, "--scan-points", cfg.scan_points, "energy scan resolution");
  opt(app, "--threads", cfg.threads, "worker threads");
  app->add_option("--config", cfg.config, "JSON file mirroring the flags; flags win");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Klein-Gordon bound states in mixed scalar/vector Yukawa potentials"};
  app.require_subcommand(1);

  using Command = Output (*)(const RunConfig&, std::ostream&);
  std::vector<std::pair<CLI::App*, Command>> commands;
  const auto add = [&](const char* name, const char* help, Command fn) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, cfg);
    commands.emplace_back(sub, fn);
    return sub;
  };
  add("solve", "energy of one state", cmd_solve);
  add("table", "energies over n, l, D ranges", cmd_table);
  auto* deg = add("degeneracy", "compare (n, l, D) with (n, l+-1, D-+2)", cmd_degeneracy);
  opt(deg, "--max-diff", cfg.max_diff, "allowed |dE| (default 1e-10)");
  auto* wf = add("wavefunction", "normalized radial wavefunction samples", cmd_wavefunction);
  opt(wf, "--points", cfg.points, "sample count (default 4096)");
  auto* pot = add("potential", "exact vs approximated Yukawa term", cmd_potential);
  opt(pot, "--r-min", cfg.r_min, "first radius (default 0.01/a)");
  opt(pot, "--r-max", cfg.r_max, "last radius (default 10/a)");
  opt(pot, "--points", cfg.points, "sample count (default 1000)");
  auto* orc = add("oracle", "finite-difference cross-check", cmd_oracle);
  opt(orc, "--mode", cfg.mode, "approximated, exact or both (default both)");
  opt(orc, "--r-min", cfg.r_min, "grid start");
  opt(orc, "--r-max", cfg.r_max, "grid end");
  opt(orc, "--points", cfg.points, "coarse grid points");
  auto* lim = add("limits", "nonrelativistic and Coulomb limits", cmd_limits);
  opt(lim, "--steps", cfg.steps, "halvings of (v0, a) in the convergence report (default 3)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  Command fn = nullptr;
  for (const auto& [sub, f] : commands) {
    if (sub->parsed()) fn = f;
  }

  try {
    merge_config_file(cfg);
    std::ostringstream diag;
    const Output o = fn(cfg, diag);
    if (cfg.out) {
      std::ofstream file(*cfg.out, std::ios::binary);
      if (!file) throw InvalidArgument("cannot open output file '" + *cfg.out + "'");
      file << o.text;
    } else {
      out << o.text;
    }
    err << diag.str();
    return o.code;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_of(e.kind());
  } catch (const json::exception& e) {
    err << "error: InvalidArgument: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericFailure;
  }
}

}  // namespace kgy::cli
