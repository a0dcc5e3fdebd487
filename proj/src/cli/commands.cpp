#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "elastica/cli.hpp"
#include "elastica/closed.hpp"
#include "elastica/frenet.hpp"
#include "elastica/hamiltonian.hpp"
#include "elastica/io.hpp"
#include "elastica/lagrangian.hpp"
#include "elastica/reconstruct.hpp"
#include "elastica/scalar.hpp"
#include "elastica/simd/diagnostics.hpp"

namespace elastica::cli {

namespace {

// Default thresholds, one per reported invariant.
constexpr double kGaugeDrift = 1e-8;
constexpr double kElResidual = 1e-5;
constexpr double kMomentumDrift = 1e-8;
constexpr double kEnergy = 1e-10;
constexpr double kScalarIdentity = 1e-8;
constexpr double kReparametrization = 1e-12;

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double relative_drift(const std::array<std::vector<double>, 3>& v) {
  const Vec3 first(v[0][0], v[1][0], v[2][0]);
  const double scale = std::max(1.0, norm(first));
  double m = 0.0;
  for (std::size_t i = 0; i < v[0].size(); ++i) {
    m = std::max(m, norm(Vec3(v[0][i], v[1][i], v[2][i]) - first) / scale);
  }
  return m;
}

// Writes through `out` when no path is given.
template <typename Writer>
void emit(const std::string& path, std::ostream& out, Writer&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream os(path);
  if (!os) throw InputError("cannot open '" + path + "' for writing");
  write(os);
  if (!os) throw InputError("write to '" + path + "' failed");
}

io::InitialData initial(const Options& o, std::ostream& err) {
  if (o.config.empty()) throw InputError("--config is required");
  io::InitialData d = io::load_config(o.config);
  if (d.projected) {
    err << "warning: initial jet was off the arclength conditions (residual " << d.input_residual
        << "); projected\n";
  }
  return d;
}

// Maps library exceptions onto the documented exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const SizeError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const FrameUndefined& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const BranchError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  }
}

int write_curve(const Options& o, std::ostream& out, const CurveTrace& trace) {
  emit(o.out, out, [&](std::ostream& os) { io::write_curve_csv(os, trace); });
  return kOk;
}

}  // namespace

ode::RunOptions Options::run_options() const {
  ode::RunOptions r;
  r.step = step;
  r.length = length;
  r.method = method;
  r.project = project;
  ode::step_count(step, length);
  return r;
}

std::vector<Check> invariant_checks(const CurveTrace& trace, std::optional<double> tol) {
  auto limit = [&](double fallback) { return tol.value_or(fallback); };
  const simd::JetColumns cols = simd::JetColumns::from_trace(trace);
  simd::SampleDiagnostics d;
  simd::diagnose(cols, d);
  const std::size_t n = trace.size();

  double el = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) el = std::max(el, norm(el_residual(trace, i)));

  double energy_max = 0.0, scalar4 = 0.0, scalar5 = 0.0, fi_drift = 0.0, j_tau = 0.0;
  double fi0 = std::nan("");
  const double c0 = d.twist[0];
  double c_drift = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const JetState& j = trace[i];
    energy_max = std::max(energy_max, std::abs(energy(j)));
    const Vec3 p(d.p[0][i], d.p[1][i], d.p[2][i]);
    const Vec3 l(d.l[0][i], d.l[1][i], d.l[2][i]);
    const double lp = dot(l, p);
    scalar4 = std::max(scalar4, std::abs(d.twist[i] + lp / 4.0));
    c_drift = std::max(c_drift, std::abs(d.twist[i] - c0));
    const double k2 = d.kappa_sq[i];
    if (k2 > kKappaMin * kKappaMin) {
      const double kd = d.kappa_rate[i] / std::sqrt(k2);
      const double fi = kd * kd + k2 * k2 / 4.0 + lp * lp / (16.0 * k2);
      scalar5 = std::max(scalar5, std::abs(4.0 * fi - norm_sq(p)));
      if (std::isnan(fi0)) fi0 = fi;
      fi_drift = std::max(fi_drift, std::abs(fi - fi0) / std::max(1.0, std::abs(fi0)));
    }
    const PhaseState ps = legendre(j);
    const double s = j.t;
    for (const auto& [tau, tau_dot] : {std::pair{1.0, 0.0}, std::pair{s, 1.0},
                                       std::pair{std::exp(s), std::exp(s)}}) {
      j_tau = std::max(j_tau, std::abs(diff_momentum(ps, tau, tau_dot)) /
                                  std::max(1.0, std::abs(tau_dot)));
    }
  }

  std::vector<Check> checks = {
      {"speed", max_abs(d.speed_defect), limit(kGaugeDrift)},
      {"tangency", max_abs(d.tangency), limit(kGaugeDrift)},
      {"acceleration", max_abs(d.acceleration), limit(kGaugeDrift)},
      {"el_residual", el, limit(kElResidual)},
      {"p_drift", relative_drift(d.p), limit(kMomentumDrift)},
      {"l_drift", relative_drift(d.l), limit(kMomentumDrift)},
      {"energy", energy_max, limit(kEnergy)},
      {"c_drift", c_drift, limit(kScalarIdentity)},
      {"scalar_torsion_identity", scalar4, limit(kScalarIdentity)},
      {"scalar_first_integral_identity", scalar5, limit(kScalarIdentity)},
      {"first_integral_drift", fi_drift, limit(kScalarIdentity)},
      {"xdot_p", max_abs(d.xdot_p), limit(kScalarIdentity)},
      {"j_tau", j_tau, limit(kReparametrization)},
  };
  return checks;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ode::RunOptions r = o.run_options();
    const io::InitialData d = initial(o, err);
    return write_curve(o, out, integrate_elastica(d.jet, r));
  });
}

int cmd_hamiltonian(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ode::RunOptions r = o.run_options();
    const io::InitialData d = initial(o, err);
    return write_curve(o, out, to_curve_trace(integrate_flow(legendre(d.jet), r)));
  });
}

int cmd_reconstruct(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ode::RunOptions r = o.run_options();
    const io::InitialData d = initial(o, err);
    return write_curve(o, out, reconstruct(d.jet, r));
  });
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ode::RunOptions r = o.run_options();
    const io::InitialData d = initial(o, err);
    const FrenetFrame f = frenet_frame(d.jet);
    const double c = constants_from_momenta(conserved_momenta(d.jet)).c;
    const CurvatureTrace k = integrate_scalar(f.kappa(), dot(d.jet.xddot, d.jet.xdddot) / f.kappa(),
                                              c, r, d.jet.t);
    emit(o.out, out, [&](std::ostream& os) { io::write_curvature_csv(os, k); });
    return static_cast<int>(kOk);
  });
}

int cmd_closed(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ode::RunOptions r = o.run_options();
    const io::InitialData d = initial(o, err);
    const FrenetFrame f = frenet_frame(d.jet);
    const double kappa_dot = dot(d.jet.xddot, d.jet.xdddot) / f.kappa();
    const auto run = integrate_closed_frames(d.jet.x, f, kappa_dot, o.lambda, r);
    return write_curve(o, out, closed_curve_trace(run, r.step));
  });
}

int cmd_invariants(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.trace.empty()) throw InputError("--trace is required");
    const CurveTrace trace = io::read_curve_csv(o.trace);
    const std::vector<Check> checks = invariant_checks(trace, o.tol);
    nlohmann::json report;
    report["samples"] = trace.size();
    report["step"] = trace.step();
    bool all = true;
    for (const Check& c : checks) {
      report["checks"][c.name] = {{"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass()}};
      all = all && c.pass();
    }
    report["pass"] = all;
    emit(o.out, out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
    return static_cast<int>(all ? kOk : kViolation);
  });
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.a.empty() || o.b.empty()) throw InputError("--a and --b are required");
    const CurveTrace a = io::read_curve_csv(o.a);
    const CurveTrace b = io::read_curve_csv(o.b);
    if (a.size() != b.size()) {
      throw InputError("traces have different lengths (" + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()) + ")");
    }
    double sup = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a[i].t - b[i].t) > 1e-9 * std::max(1.0, std::abs(a[i].t))) {
        throw InputError("traces are sampled on different grids (row " + std::to_string(i) + ")");
      }
      sup = std::max(sup, norm(a[i].x - b[i].x));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", sup);
    out << buf << '\n';
    return static_cast<int>(sup <= o.tol.value_or(1e-6) ? kOk : kViolation);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elastica laboratory: integrate, reduce, reconstruct and check elastic curves"};
  app.require_subcommand(1);
  Options o;
  std::string method = "rk4";
  std::string project = "off";
  double tol = 0.0;

  auto run_flags = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON initial data")->required();
    sub->add_option("--out", o.out, "output path (default: stdout)");
    sub->add_option("--step", o.step, "sample spacing in arclength")->check(CLI::PositiveNumber);
    sub->add_option("--length", o.length, "arclength of the run")->check(CLI::PositiveNumber);
    sub->add_option("--method", method, "rk4 or rk45")->check(CLI::IsMember({"rk4", "rk45"}));
    sub->add_option("--project", project, "on or off")->check(CLI::IsMember({"on", "off"}));
  };

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&,
                                                               std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, [&, fn] { return fn(o, out, err); });
    return sub;
  };

  run_flags(add("simulate", "integrate the arclength Euler-Lagrange system", cmd_simulate));
  run_flags(add("hamiltonian", "integrate the constrained Hamiltonian flow", cmd_hamiltonian));
  run_flags(add("reconstruct", "scalar reduction plus reconstruction from momenta", cmd_reconstruct));
  run_flags(add("reduce", "integrate the scalar curvature equation", cmd_reduce));
  CLI::App* closed = add("closed", "length-constrained elastica with multiplier lambda", cmd_closed);
  run_flags(closed);
  closed->add_option("--lambda", o.lambda, "length multiplier");

  CLI::App* inv = add("invariants", "invariant report for a curve trace", cmd_invariants);
  inv->add_option("--trace", o.trace, "curve CSV")->required();
  inv->add_option("--out", o.out, "report path (default: stdout)");
  inv->add_option("--tol", tol, "override every threshold");

  CLI::App* cmp = add("compare", "sup-norm position difference of two traces", cmd_compare);
  cmp->add_option("--a", o.a, "first curve CSV")->required();
  cmp->add_option("--b", o.b, "second curve CSV")->required();
  cmp->add_option("--tol", tol, "pass threshold (default 1e-6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  o.method = method == "rk45" ? ode::Method::rk45 : ode::Method::rk4;
  o.project = project == "on";
  for (auto* sub : {inv, cmp}) {
    if (sub->parsed() && sub->count("--tol") > 0) o.tol = tol;
  }
  for (auto& [sub, fn] : commands) {
    if (sub->parsed()) return fn();
  }
  return kInputError;
}

}  // namespace elastica::cli
