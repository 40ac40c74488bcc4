#include "affineqm/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "affineqm/analytic.hpp"
#include "affineqm/eigensolve.hpp"
#include "affineqm/specfun.hpp"
#include "affineqm/verify.hpp"

#ifndef AFFINEQM_VERSION
#define AFFINEQM_VERSION "0.0.0"
#endif

namespace affineqm::cli {

namespace {

constexpr const char* kTool = "affineqm";

// Closure errors below this level are quadrature noise.
constexpr double kClosureNoiseFloor = 1e-12;

std::string format_17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_17(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

std::string units_note(const RunConfig& c) {
  if (c.dimensionless) return "units: dimensionless eigenvalues eps = 2*mass*E/hbar^2";
  return "units: E = eps*hbar^2/(2*mass) with hbar=" + format_shortest(c.hbar) +
         " mass=" + format_shortest(c.mass) + " omega=" + format_shortest(c.omega);
}

std::string grid_note(const HalfLineGrid& g, double b) {
  return "grid: npoints=" + std::to_string(g.size()) + " extent=" + format_shortest(g.xmax()) +
         " h=" + format_17(g.spacing()) + " shift_b=" + format_shortest(b) +
         " (nodes u_i = i*h, x = u - b)";
}

double to_output(const RunConfig& c, double eps) {
  return c.dimensionless ? eps : c.params().to_energy(eps);
}

SpikedPotential potential_for(const RunConfig& c) {
  switch (c.model) {
    case ModelKind::Free:
      return SpikedPotential::free_particle();
    case ModelKind::HalfHO:
      return SpikedPotential::half_oscillator(c.params());
    case ModelKind::Shifted:
      return SpikedPotential::shifted_oscillator(c.params(), c.b);
  }
  throw UsageError("unknown model");
}

// True when the model has closed-form bound states on the configured grid.
bool has_analytic(const RunConfig& c) {
  return c.model != ModelKind::Shifted || c.b == 0.0;
}

// Analytic dimensionless eigenvalue j for models that have one.
double analytic_eps(const RunConfig& c, int j) {
  if (c.model == ModelKind::Free) {
    const double k = specfun::bessel_j1_zero(j + 1) / c.xmax;
    return k * k;
  }
  return c.params().to_dimensionless(analytic::ho_energy(j, c.params()));
}

void require_oscillator(const RunConfig& c) {
  if (c.model != ModelKind::Free && !(c.omega > 0.0)) {
    throw UsageError("half-ho and shifted models need --omega > 0");
  }
}

struct Check {
  std::string name;
  std::string quantity;
  double observed;
  double threshold;
  bool pass;
};

void add_check(std::vector<Check>& checks, std::string name, std::string quantity,
               double observed, double threshold, bool pass) {
  checks.push_back({std::move(name), std::move(quantity), observed, threshold, pass});
}

void verify_lemma(const RunConfig& c, std::vector<Check>& checks) {
  using analytic::Branch;
  const auto params = c.params();
  constexpr int kMax = 10;

  const auto rule = specfun::halfline_rule(12.0, 128);
  double worst = 0.0;
  for (int n = 0; n <= kMax; ++n) {
    for (int m = 0; m <= kMax; ++m) {
      const auto fn = specfun::KummerParams::polynomial(n, 2.0);
      const auto fm = specfun::KummerParams::polynomial(m, 2.0);
      const double q = rule.integrate([&](double x) {
        const double y = x * x;
        return x * x * x * std::exp(-y) * specfun::kummer_1f1(fn, y) *
               specfun::kummer_1f1(fm, y);
      });
      worst = std::max(worst, std::fabs(q - analytic::landau_integral(n, m, 2.0, 1.0)));
    }
  }
  add_check(checks, "lemma.quadrature", "max|closed-form - 128pt quadrature|", worst, 1e-10,
            worst < 1e-10);

  const double lambda = params.lambda();
  double worst_rel = 0.0;
  for (int n = 0; n <= kMax; ++n) {
    const double expected_a = lambda * std::sqrt(2.0 * (n + 1));
    const double expected_b = std::sqrt(2.0 * (n + 1));
    worst_rel = std::max(worst_rel,
                         std::fabs(analytic::normalization_constant(n, Branch::First, params) -
                                   expected_a) / expected_a);
    worst_rel = std::max(worst_rel,
                         std::fabs(analytic::normalization_constant(n, Branch::Second, params) -
                                   expected_b) / expected_b);
  }
  add_check(checks, "lemma.norm_constants", "max relative deviation of A_n, B_n", worst_rel,
            1e-12, worst_rel < 1e-12);

  double worst_branch = 0.0;
  constexpr int kSamples = 1000;
  for (int n = 0; n <= kMax; ++n) {
    for (int i = 0; i < kSamples; ++i) {
      const double x = 8.0 * (i + 0.5) / kSamples;
      worst_branch = std::max(
          worst_branch, std::fabs(analytic::ho_eigenfunction(n, Branch::First, params, x) -
                                  analytic::ho_eigenfunction(n, Branch::Second, params, x)));
    }
  }
  add_check(checks, "lemma.branch_equivalence", "max|phi_first - phi_second|", worst_branch,
            1e-14, worst_branch < 1e-14);

  const auto gram = verify::orthonormality_matrix(kMax, params, specfun::halfline_rule(c.xmax));
  const double dev = verify::max_deviation_from_identity(gram);
  add_check(checks, "lemma.gram", "max|G - I| for n,m <= 10", dev, 1e-8, dev < 1e-8);
}

void verify_closure(const RunConfig& c, std::vector<Check>& checks) {
  const std::vector<double> ladder{10.0, 20.0, 30.0, 40.0};
  verify::ClosureOptions opts;
  opts.xmax = c.xmax;
  const auto report = verify::closure_check(verify::closure_bump, "exp(-4(x-3)^2)", ladder, opts);
  bool monotone = true;
  for (std::size_t i = 0; i < report.error_curve.size(); ++i) {
    const auto [k, err] = report.error_curve[i];
    add_check(checks, "closure.error", "L2 error on [1,6] at K=" + format_shortest(k), err,
              std::nan(""), true);
    if (i > 0 && err > report.error_curve[i - 1].second && err > kClosureNoiseFloor) {
      monotone = false;
    }
  }
  add_check(checks, "closure.monotone", "error non-increasing in K above noise floor",
            monotone ? 1.0 : 0.0, 1.0, monotone);
  const double drop = report.error_curve.front().second / report.error_curve.back().second;
  add_check(checks, "closure.drop", "error(K=10)/error(K=40)", drop, 10.0, drop >= 10.0);
}

void verify_commutator(const RunConfig& c, std::vector<Check>& checks) {
  const std::vector<int> sizes{1000, 2000, 4000};
  const auto study =
      verify::commutator_convergence(sizes, verify::kCommutatorXmax, c.params());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const bool bound = sizes[i] != 2000 || study.residuals[i] < 1e-4;
    add_check(checks, "commutator.residual",
              "||([x,d] - i hbar x) psi|| at npoints=" + std::to_string(sizes[i]),
              study.residuals[i], sizes[i] == 2000 ? 1e-4 : std::nan(""), bound);
  }
  for (std::size_t i = 0; i < study.orders.size(); ++i) {
    const double p = study.orders[i];
    add_check(checks, "commutator.order",
              "observed order " + std::to_string(sizes[i]) + "->" + std::to_string(sizes[i + 1]),
              p, 2.0, std::fabs(p - 2.0) <= 0.3);
  }
}

void verify_residuals(const RunConfig& c, std::vector<Check>& checks) {
  require_oscillator(c);
  const auto params = c.params();
  const HalfLineGrid grid(c.xmax, c.npoints);
  constexpr int kStates = 5;

  const auto good = verify::residual_report_analytic(params, kStates, grid);
  for (const auto& e : good) {
    add_check(checks, "residuals.analytic_order", "phi_" + std::to_string(e.index), e.order, 2.0,
              std::fabs(e.order - 2.0) <= 0.3);
  }
  const auto bad = verify::residual_report_analytic(params, kStates, grid, 0.1);
  for (const auto& e : bad) {
    add_check(checks, "residuals.analytic_negative_control",
              "phi_" + std::to_string(e.index) + " with eps+0.1", e.residual, 1e-2,
              e.residual > 1e-2);
  }

  const std::vector<double> ks{1.0, 2.0};
  for (const auto& e : verify::residual_report_free(ks, HalfLineGrid(4.0, 2000))) {
    add_check(checks, "residuals.free_order", "phi_k with k=" + format_shortest(ks[e.index]),
              e.order, 2.0, std::fabs(e.order - 2.0) <= 0.3);
  }

  const auto pot = SpikedPotential::half_oscillator(params);
  const auto op = eigensolve::build_hamiltonian(pot, grid);
  const auto spectrum = eigensolve::solve_spectrum(op, kStates, true);
  for (const auto& e : verify::residual_report_numeric(op, spectrum)) {
    add_check(checks, "residuals.numeric", "||Hv - eps v||/||v|| state " + std::to_string(e.index),
              e.residual, 1e-8, e.residual < 1e-8);
  }
  for (const auto& e : verify::residual_report_numeric(op, spectrum, 0.1)) {
    add_check(checks, "residuals.numeric_negative_control",
              "state " + std::to_string(e.index) + " with eps+0.1", e.residual, 1e-2,
              e.residual > 1e-2);
  }
}

}  // namespace

ModelKind parse_model(const std::string& s) {
  if (s == "free") return ModelKind::Free;
  if (s == "half-ho") return ModelKind::HalfHO;
  if (s == "shifted") return ModelKind::Shifted;
  throw UsageError("unknown model '" + s + "' (expected free, half-ho or shifted)");
}

std::string to_string(ModelKind m) {
  switch (m) {
    case ModelKind::Free: return "free";
    case ModelKind::HalfHO: return "half-ho";
    case ModelKind::Shifted: return "shifted";
  }
  return "?";
}

OutputFormat parse_output(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw UsageError("unknown output format '" + s + "' (expected csv or json)");
}

std::string to_string(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

VerifyTarget parse_verify_target(const std::string& s) {
  if (s == "lemma") return VerifyTarget::Lemma;
  if (s == "closure") return VerifyTarget::Closure;
  if (s == "commutator") return VerifyTarget::Commutator;
  if (s == "residuals") return VerifyTarget::Residuals;
  if (s == "all") return VerifyTarget::All;
  throw UsageError("unknown verify target '" + s + "'");
}

std::string to_string(VerifyTarget t) {
  switch (t) {
    case VerifyTarget::Lemma: return "lemma";
    case VerifyTarget::Closure: return "closure";
    case VerifyTarget::Commutator: return "commutator";
    case VerifyTarget::Residuals: return "residuals";
    case VerifyTarget::All: return "all";
  }
  return "?";
}

void RunConfig::validate() const {
  if (!(b >= 0.0) || !std::isfinite(b)) throw UsageError("--b must be >= 0");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw UsageError("--hbar must be > 0");
  if (!(mass > 0.0) || !std::isfinite(mass)) throw UsageError("--mass must be > 0");
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw UsageError("--omega must be >= 0");
  if (!(xmax > 0.0) || !std::isfinite(xmax)) throw UsageError("--xmax must be > 0");
  if (npoints < 16) throw UsageError("--npoints must be >= 16");
  if (count < 1) throw UsageError("--count must be >= 1");
  if (!(tol > 0.0)) throw UsageError("--tol must be > 0");
  if (model != ModelKind::Shifted && b != 0.0) {
    throw UsageError("--b is only meaningful with --model shifted");
  }
}

std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string RunConfig::echo() const {
  std::ostringstream s;
  s << "model=" << to_string(model) << " b=" << format_shortest(b)
    << " hbar=" << format_shortest(hbar) << " mass=" << format_shortest(mass)
    << " omega=" << format_shortest(omega) << " xmax=" << format_shortest(xmax)
    << " npoints=" << npoints << " count=" << count << " tol=" << format_shortest(tol)
    << " output=" << to_string(output) << " dimensionless=" << (dimensionless ? "true" : "false");
  return s.str();
}

void write_table(const Table& table, const RunConfig& config, std::ostream& out) {
  if (config.output == OutputFormat::Csv) {
    out << "# " << kTool << ' ' << AFFINEQM_VERSION << '\n';
    out << "# command: " << table.command << '\n';
    out << "# config: " << config.echo() << '\n';
    for (const auto& note : table.notes) out << "# " << note << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["config"] = {{"tool", kTool},
                   {"version", AFFINEQM_VERSION},
                   {"command", table.command},
                   {"model", to_string(config.model)},
                   {"b", config.b},
                   {"hbar", config.hbar},
                   {"mass", config.mass},
                   {"omega", config.omega},
                   {"xmax", config.xmax},
                   {"npoints", config.npoints},
                   {"count", config.count},
                   {"tol", config.tol},
                   {"output", to_string(config.output)},
                   {"dimensionless", config.dimensionless},
                   {"notes", table.notes}};
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& cell : row) r.push_back(json_cell(cell));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& log) {
  config.validate();
  require_oscillator(config);
  const auto pot = potential_for(config);
  const auto grid = eigensolve::grid_for(pot, config.xmax, config.npoints);
  if (config.count > grid.size()) throw UsageError("--count exceeds the number of grid nodes");
  const auto op = eigensolve::build_hamiltonian(pot, grid);
  const auto spectrum = eigensolve::solve_spectrum(op, config.count, false);

  Table table;
  table.command = "spectrum";
  table.notes = {units_note(config), grid_note(grid, pot.b),
                 "potential: alpha=" + format_shortest(pot.alpha) +
                     " lambda2=" + format_shortest(pot.lambda2) +
                     " (V = alpha/(x+b)^2 + lambda2*x^2)"};
  if (config.model == ModelKind::Free) {
    table.notes.push_back("analytic: hbar^2 (j_n/xmax)^2 / (2 mass), j_n the n-th zero of J_1");
  } else if (has_analytic(config)) {
    table.notes.push_back("analytic: E_n = 2(n+1) hbar omega");
  }
  table.columns = {"n", "E_numeric", "E_analytic", "abs_err", "rel_err"};

  double worst = 0.0;
  for (int j = 0; j < config.count; ++j) {
    const double numeric = to_output(config, spectrum.eigenvalues[j]);
    std::vector<Cell> row{static_cast<long long>(j), numeric};
    if (has_analytic(config)) {
      const double ref = to_output(config, analytic_eps(config, j));
      const double abs_err = std::fabs(numeric - ref);
      const double rel_err = abs_err / std::fabs(ref);
      worst = std::max(worst, rel_err);
      row.insert(row.end(), {ref, abs_err, rel_err});
    } else {
      row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{}});
    }
    table.rows.push_back(std::move(row));
  }
  write_table(table, config, out);
  if (has_analytic(config) && worst > config.tol) {
    log << "spectrum: max relative error " << format_17(worst) << " exceeds --tol "
        << format_shortest(config.tol) << '\n';
    return kExitFailure;
  }
  log << "spectrum: " << config.count << " eigenvalues";
  if (has_analytic(config)) log << ", max relative error " << format_17(worst);
  log << '\n';
  return kExitOk;
}

int cmd_eigenfunc(const RunConfig& config, int n, int samples, std::ostream& out,
                  std::ostream& log) {
  config.validate();
  require_oscillator(config);
  if (n < 0 || n >= config.count) throw UsageError("--n must satisfy 0 <= n < --count");
  if (samples < 1) throw UsageError("--samples must be >= 1");
  const auto pot = potential_for(config);
  const auto grid = eigensolve::grid_for(pot, config.xmax, config.npoints);
  const auto op = eigensolve::build_hamiltonian(pot, grid);
  const auto spectrum = eigensolve::solve_spectrum(op, n + 1, true);
  const auto& psi = spectrum.eigenvectors[n];

  std::function<double(double)> reference;
  if (config.model == ModelKind::Free) {
    reference = analytic::BoxedFreeState(n, config.xmax);
  } else if (has_analytic(config)) {
    reference = analytic::AnalyticEigenstate(n, analytic::Branch::First, config.params());
  }

  Table table;
  table.command = "eigenfunc";
  const int stride = std::max(1, grid.size() / samples);
  std::vector<double> column;
  for (int i = 0; i < grid.size(); i += stride) {
    const double x = grid.node(i) - pot.b;
    const double numeric = psi.values[i];
    column.push_back(numeric);
    std::vector<Cell> row{x};
    if (reference) {
      const double ref = reference(x);
      row.insert(row.end(), {ref, numeric, numeric - ref});
    } else {
      row.insert(row.end(), {std::monostate{}, numeric, std::monostate{}});
    }
    table.rows.push_back(std::move(row));
  }
  table.notes = {units_note(config), grid_note(grid, pot.b),
                 "state: n=" + std::to_string(n) +
                     " eps_numeric=" + format_17(spectrum.eigenvalues[n]) +
                     " E_numeric=" + format_17(to_output(config, spectrum.eigenvalues[n])),
                 "normalization: h*sum(phi^2) = 1; sign fixed so the first significant "
                 "sample is positive",
                 "sampling: every " + std::to_string(stride) + " grid node(s)"};
  table.columns = {"x", "phi_analytic", "phi_numeric", "diff"};
  write_table(table, config, out);
  log << "eigenfunc: n=" << n << " sign changes=" << verify::count_sign_changes(psi.values)
      << '\n';
  return kExitOk;
}

std::vector<double> linspace_b(double bfrom, double bto, int steps) {
  if (!(bfrom >= 0.0) || !(bto > bfrom)) throw UsageError("need 0 <= --bfrom < --bto");
  if (steps < 2) throw UsageError("--steps must be >= 2");
  std::vector<double> out(steps);
  for (int i = 0; i < steps; ++i) out[i] = bfrom + (bto - bfrom) * i / (steps - 1);
  out.back() = bto;
  return out;
}

int cmd_sweep_b(const RunConfig& config, const std::vector<double>& bvalues, std::ostream& out,
                std::ostream& log) {
  RunConfig cfg = config;
  cfg.model = ModelKind::Shifted;
  cfg.b = 0.0;
  cfg.validate();
  require_oscillator(cfg);
  if (bvalues.empty()) throw UsageError("sweep-b needs at least one b value");
  for (std::size_t i = 0; i < bvalues.size(); ++i) {
    if (!(bvalues[i] >= 0.0)) throw UsageError("b values must be >= 0");
    if (i > 0 && !(bvalues[i] > bvalues[i - 1])) {
      throw UsageError("b values must be strictly increasing");
    }
  }
  const auto params = cfg.params();
  eigensolve::SweepOptions opts;
  opts.xmax = cfg.xmax;
  opts.npoints = cfg.npoints;
  const auto rows = eigensolve::sweep_b(bvalues, cfg.count, params, opts);

  Table table;
  table.command = "sweep-b";
  table.notes = {units_note(cfg),
                 "grid: spacing h=" + format_17(cfg.xmax / (cfg.npoints + 1)) +
                     " on u = x + b in (0, b + xmax)",
                 "reference rows: b=0 gives 2(n+1) hbar omega, b->inf gives (n+1/2) hbar omega"};
  table.columns = {"kind", "b"};
  for (int j = 0; j < cfg.count; ++j) table.columns.push_back("E" + std::to_string(j));
  bool monotone = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Cell> row{std::string("numeric"), rows[i].b};
    for (double eps : rows[i].eigenvalues) row.emplace_back(to_output(cfg, eps));
    if (i > 0 && rows[i].eigenvalues[0] > rows[i - 1].eigenvalues[0]) monotone = false;
    table.rows.push_back(std::move(row));
  }
  std::vector<Cell> ref0{std::string("reference_b0"), 0.0};
  std::vector<Cell> refinf{std::string("reference_binf"), std::numeric_limits<double>::infinity()};
  for (int j = 0; j < cfg.count; ++j) {
    const double e0 = 2.0 * (j + 1) * params.energy_scale();
    const double einf = (j + 0.5) * params.energy_scale();
    ref0.emplace_back(cfg.dimensionless ? params.to_dimensionless(e0) : e0);
    refinf.emplace_back(cfg.dimensionless ? params.to_dimensionless(einf) : einf);
  }
  table.rows.push_back(std::move(ref0));
  table.rows.push_back(std::move(refinf));
  write_table(table, cfg, out);
  log << "sweep-b: " << rows.size() << " b values, E0 "
      << (monotone ? "monotone non-increasing" : "NOT monotone") << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& config, VerifyTarget which, std::ostream& out,
               std::ostream& log) {
  config.validate();
  std::vector<Check> checks;
  const bool all = which == VerifyTarget::All;
  if (all || which == VerifyTarget::Lemma) {
    require_oscillator(config);
    verify_lemma(config, checks);
  }
  if (all || which == VerifyTarget::Closure) verify_closure(config, checks);
  if (all || which == VerifyTarget::Commutator) verify_commutator(config, checks);
  if (all || which == VerifyTarget::Residuals) verify_residuals(config, checks);

  Table table;
  table.command = "verify " + to_string(which);
  table.notes = {"pass: observed meets threshold (blank threshold = informational)"};
  table.columns = {"check", "quantity", "observed", "threshold", "pass"};
  bool ok = true;
  for (const auto& c : checks) {
    std::vector<Cell> row{c.name, c.quantity, c.observed};
    if (std::isnan(c.threshold)) {
      row.emplace_back(std::monostate{});
    } else {
      row.emplace_back(c.threshold);
    }
    row.emplace_back(c.pass);
    table.rows.push_back(std::move(row));
    ok = ok && c.pass;
    log << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.quantity << " = "
        << format_17(c.observed);
    if (!std::isnan(c.threshold)) log << " (threshold " << format_shortest(c.threshold) << ")";
    log << '\n';
  }
  write_table(table, config, out);
  return ok ? kExitOk : kExitFailure;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& log) {
  CLI::App app{"Affine quantization on the half-line: spectra, eigenfunctions and checks",
               kTool};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kTool) + " " + AFFINEQM_VERSION);

  RunConfig config;
  std::string model = "half-ho";
  std::string output = "csv";
  std::string out_path;
  app.add_option("--model", model, "free | half-ho | shifted")->capture_default_str();
  app.add_option("--b", config.b, "endpoint shift b >= 0 (shifted model)")->capture_default_str();
  app.add_option("--hbar", config.hbar, "Planck constant")->capture_default_str();
  app.add_option("--mass", config.mass, "particle mass")->capture_default_str();
  app.add_option("--omega", config.omega, "angular frequency")->capture_default_str();
  app.add_option("--xmax", config.xmax, "Dirichlet truncation point")->capture_default_str();
  app.add_option("--npoints", config.npoints, "interior grid nodes")->capture_default_str();
  app.add_option("--count", config.count, "number of eigenvalues")->capture_default_str();
  app.add_option("--tol", config.tol, "relative tolerance against analytic values")
      ->capture_default_str();
  app.add_option("--output", output, "csv | json")->capture_default_str();
  app.add_option("--out", out_path, "write the table to FILE instead of stdout");
  app.add_flag("--dimensionless", config.dimensionless, "report eps = 2 m E / hbar^2");

  auto* spectrum = app.add_subcommand("spectrum", "lowest eigenvalues with analytic comparison");
  auto* eigenfunc = app.add_subcommand("eigenfunc", "sampled eigenfunction, numeric vs analytic");
  int n = 0;
  int samples = 200;
  eigenfunc->add_option("--n", n, "state index")->capture_default_str();
  eigenfunc->add_option("--samples", samples, "approximate number of rows")->capture_default_str();
  auto* sweep = app.add_subcommand("sweep-b", "spectrum of the shifted oscillator versus b");
  double bfrom = 0.0;
  double bto = 10.0;
  int steps = 11;
  std::vector<double> bvalues;
  sweep->add_option("--bfrom", bfrom, "first b")->capture_default_str();
  sweep->add_option("--bto", bto, "last b")->capture_default_str();
  sweep->add_option("--steps", steps, "number of evenly spaced b values")->capture_default_str();
  sweep->add_option("--bvalues", bvalues, "explicit comma-separated b values")->delimiter(',');
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string which = "all";
  verify->add_option("which", which, "lemma | closure | commutator | residuals | all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, log);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    config.model = parse_model(model);
    config.output = parse_output(output);
    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
      file.open(out_path, std::ios::binary);
      if (!file) throw UsageError("cannot open --out file '" + out_path + "'");
      sink = &file;
    }
    if (spectrum->parsed()) return cmd_spectrum(config, *sink, log);
    if (eigenfunc->parsed()) return cmd_eigenfunc(config, n, samples, *sink, log);
    if (sweep->parsed()) {
      const auto bs = bvalues.empty() ? linspace_b(bfrom, bto, steps) : bvalues;
      return cmd_sweep_b(config, bs, *sink, log);
    }
    if (verify->parsed()) return cmd_verify(config, parse_verify_target(which), *sink, log);
  } catch (const UsageError& e) {
    log << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace affineqm::cli
