// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every threshold below is fixed here and nowhere else.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "elastica/closed.hpp"
#include "elastica/frenet.hpp"
#include "elastica/hamiltonian.hpp"
#include "elastica/lagrangian.hpp"
#include "elastica/ode.hpp"
#include "elastica/reconstruct.hpp"
#include "elastica/scalar.hpp"
#include "elastica/symmetry.hpp"
#include "scenarios.hpp"

using namespace elastica;

namespace {

constexpr double kStep = 1e-3;

struct Measure {
  std::string what;
  double value;
  double limit;
  bool ok() const { return value <= limit; }
};

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<Measure>()> run;
};

ode::RunOptions grid(double length) {
  ode::RunOptions o;
  o.step = kStep;
  o.length = length;
  return o;
}

// Lagrangian reference run, shared by several criteria.
const CurveTrace& generic_run() {
  static const CurveTrace t = integrate_elastica(scenario::generic_jet(), grid(10.0));
  return t;
}

double rel_drift(const std::vector<Vec3>& v) {
  const double scale = std::max(1.0, norm(v.front()));
  double m = 0.0;
  for (const Vec3& x : v) m = std::max(m, norm(x - v.front()) / scale);
  return m;
}

double sup_position(const CurveTrace& a, const CurveTrace& b, std::size_t count) {
  double m = 0.0;
  for (std::size_t i = 0; i < count; ++i) m = std::max(m, norm(a[i].x - b[i].x));
  return m;
}

std::vector<Measure> solution_integrity() {
  const CurveTrace& t = generic_run();
  double speed = 0.0, tangency = 0.0, el = 0.0;
  for (const JetState& j : t) {
    speed = std::max(speed, std::abs(norm(j.xdot) - 1.0));
    tangency = std::max(tangency, std::abs(dot(j.xdot, j.xddot)));
  }
  for (std::size_t i = 2; i + 2 < t.size(); ++i) el = std::max(el, norm(el_residual(t, i)));
  return {{"sup ||xdot|-1|", speed, 1e-8},
          {"sup |<xdot,xddot>|", tangency, 1e-8},
          {"max FD EL residual", el, 1e-5}};
}

std::vector<Measure> conservation() {
  const CurveTrace& t = generic_run();
  std::vector<Vec3> p, l;
  double H = 0.0;
  for (const JetState& j : t) {
    const ConservedSet cs = conserved_momenta(j);
    p.push_back(cs.p);
    l.push_back(cs.l);
    H = std::max(H, std::abs(cs.H));
  }
  return {{"relative drift of p", rel_drift(p), 1e-8},
          {"relative drift of l", rel_drift(l), 1e-8},
          {"sup |H|", H, 1e-10}};
}

std::vector<Measure> scalar_identities() {
  const CurveTrace& t = generic_run();
  double s4 = 0.0, s5 = 0.0, xp = 0.0;
  for (const JetState& j : t) {
    const ConservedSet cs = conserved_momenta(j);
    const FrenetFrame f = frenet_frame(j);
    const double k = f.kappa();
    const double kd = dot(j.xddot, j.xdddot) / k;
    const double lp = dot(cs.l, cs.p);
    s4 = std::max(s4, std::abs(k * k * f.tau() + lp / 4.0));
    s5 = std::max(s5, std::abs(4.0 * (kd * kd + std::pow(k, 4) / 4.0 + lp * lp / (16.0 * k * k)) -
                               norm_sq(cs.p)));
    xp = std::max(xp, std::abs(dot(j.xdot, cs.p) + k * k));
  }
  return {{"|kappa^2 tau + <l,p>/4|", s4, 1e-8},
          {"|4(first integral) - |p|^2|", s5, 1e-8},
          {"|<xdot,p> + kappa^2|", xp, 1e-8}};
}

std::vector<Measure> formulation_equivalence() {
  const CurveTrace& lag = generic_run();
  const std::size_t n = ode::step_count(kStep, 5.0) + 1;
  const PhaseTrace ham = integrate_flow(legendre(scenario::generic_jet()), grid(5.0));
  const CurveTrace ham_curve = to_curve_trace(ham);
  const CurveTrace rec = reconstruct(scenario::generic_jet(), grid(5.0));
  return {{"Hamiltonian vs Lagrangian sup |dx|", sup_position(ham_curve, lag, n), 1e-6},
          {"reconstruction vs Lagrangian sup |dx|", sup_position(rec, lag, n), 1e-4}};
}

std::vector<Measure> constraint_preservation() {
  const PhaseTrace ham = integrate_flow(legendre(scenario::generic_jet()), grid(10.0));
  double pt = 0.0, px = 0.0, h = 0.0;
  for (const PhaseState& ps : ham) {
    const ConstraintResiduals r = constraint_residuals(ps);
    pt = std::max(pt, std::abs(r.p_t));
    px = std::max(px, std::abs(r.pdot_xdot));
    h = std::max(h, std::abs(r.h));
  }
  return {{"sup |p_t|", pt, 1e-8}, {"sup |<p_xdot,xdot>|", px, 1e-8}, {"sup |h|", h, 1e-8}};
}

std::vector<Measure> noether_machinery() {
  const std::vector<SymmetryField> fields = {
      SymmetryField::translation(kE1), SymmetryField::translation(kE2),
      SymmetryField::translation(kE3), SymmetryField::rotation(kE1),
      SymmetryField::rotation(kE2),    SymmetryField::rotation(kE3),
      SymmetryField::time_translation()};
  const CurveTrace& t = generic_run();
  double on_shell = 0.0;
  for (const SymmetryField& X : fields) {
    std::vector<double> J(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) J[i] = noether_charge(X, t[i]);
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
      on_shell = std::max(on_shell, std::abs(J[i + 1] - J[i - 1]) / (2.0 * kStep));
    }
  }
  const CurveTrace circle = scenario::circle_trace(kStep, 10000);
  double off_shell = 0.0;
  for (const SymmetryField& X : fields) {
    for (std::size_t i = 2; i + 2 < circle.size(); ++i) {
      off_shell = std::max(off_shell, std::abs(noether_identity_residual(X, circle, i)));
    }
  }
  double j_one = 0.0, j_lin = 0.0, j_exp = 0.0;
  for (const JetState& j : t) {
    const PhaseState ps = legendre(j);
    const double e = std::exp(j.t);
    j_one = std::max(j_one, std::abs(diff_momentum(ps, 1.0, 0.0)));
    j_lin = std::max(j_lin, std::abs(diff_momentum(ps, j.t, 1.0)));
    j_exp = std::max(j_exp, std::abs(diff_momentum(ps, e, e)));
  }
  return {{"max FD d/ds of 7 charges on solution", on_shell, 1e-6},
          {"max Noether identity residual on circle", off_shell, 1e-6},
          {"max |J_tau|, tau = 1", j_one, 1e-12},
          {"max |J_tau|, tau = t", j_lin, 1e-12},
          {"max |J_tau|, tau = e^t", j_exp, 1e-12}};
}

std::vector<Measure> degenerate_branches() {
  const JetState pj = scenario::planar_jet();
  const CurveTrace planar = integrate_elastica(pj, grid(10.0));
  const Vec3 B0 = frenet_frame(pj).B();
  double b_dev = 0.0, off_plane = 0.0;
  for (const JetState& j : planar) {
    const Vec3 w = cross(j.xdot, j.xddot);
    const double k = norm(j.xddot);
    if (k > 1e-4) b_dev = std::max(b_dev, norm(cross(w / k, B0)));
    off_plane = std::max(off_plane, std::abs(dot(j.x - pj.x, B0)));
  }
  const ConservedSet cs = conserved_momenta(pj);
  const CurvatureTrace k = integrate_scalar(1.0, 0.3, 0.0, grid(10.0));
  const CurveTrace closed_form = reconstruct_planar(k, cs, pj.x, B0);

  const CurveTrace line = integrate_elastica(scenario::line_jet(), grid(10.0));
  double momenta = 0.0, linear = 0.0;
  for (const JetState& j : line) {
    const Momenta m = ostrogradski_momenta(j);
    const ConservedSet c = conserved_momenta(j);
    momenta = std::max({momenta, norm(m.p_x), norm(m.p_xdot), norm(c.p), norm(c.l)});
    linear = std::max(linear, norm(j.x - (line.front().x + j.t * line.front().xdot)));
  }
  return {{"planar: B deviation", b_dev, 1e-8},
          {"planar: distance from initial plane", off_plane, 1e-8},
          {"planar: closed form vs direct sup |dx|", sup_position(closed_form, planar, planar.size()),
           1e-6},
          {"line: max momentum norm", momenta, 1e-12},
          {"line: deviation from x0 + s xdot0", linear, 1e-12}};
}

std::vector<Measure> closed_elastica() {
  double drift = 0.0;
  for (double lambda : {0.0, 1.0}) {
    const double c = 0.2;  // kappa0^2 tau0 with kappa0 = 1, tau0 = 0.2
    const CurvatureTrace k = integrate_closed_scalar(1.0, 0.3, c, lambda, grid(10.0));
    const double c_norm = std::sqrt(4.0 * 0.09 + (lambda - 1.0) * (lambda - 1.0) + 4.0 * c * c);
    for (std::size_t i = 0; i < k.size(); ++i) {
      const double kk = k.kappa[i];
      const double tau = c / (kk * kk);
      drift = std::max(drift, std::abs(foltinek_invariant(kk, k.kappa_dot[i], lambda, c_norm,
                                                          angular_momentum_j(kk, tau))));
    }
  }
  double ident = 0.0;
  for (const JetState& j : generic_run()) {
    const ConservedSet cs = conserved_momenta(j);
    const FrenetFrame f = frenet_frame(j);
    const double kd = dot(j.xddot, j.xdddot) / f.kappa();
    ident = std::max(ident, std::abs(foltinek_invariant(f.kappa(), kd, 0.0, norm(cs.p),
                                                        dot(cs.l, cs.p))));
  }
  return {{"Foltinek drift, lambda in {0,1}", drift, 1e-8},
          {"lambda = 0 identification on free trace", ident, 1e-8}};
}

double slope(const std::vector<double>& h, const std::vector<double>& e) {
  // Least-squares slope of log e against log h.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]), y = std::log(e[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<Measure> order_checks() {
  const std::vector<double> hs = {1e-1, 1e-2, 1e-3};
  std::vector<double> rk;
  for (double h : hs) {
    const auto y = ode::integrate<1>([](const ode::State<1>& s) { return s; }, ode::State<1>{1.0},
                                     h, ode::step_count(h, 1.0));
    rk.push_back(std::abs(y.back()[0] - std::exp(1.0)));
  }
  std::vector<double> qh, qe;
  for (std::size_t n : {8u, 16u, 32u, 64u}) {
    const double h = M_PI / static_cast<double>(n);
    std::vector<double> f(n + 1);
    for (std::size_t i = 0; i <= n; ++i) f[i] = std::sin(h * static_cast<double>(i));
    qh.push_back(h);
    qe.push_back(std::abs(ode::simpson(f, h) - 2.0));
  }
  return {{"|RK4 slope - 4|", std::abs(slope(hs, rk) - 4.0), 0.2},
          {"|Simpson slope - 4|", std::abs(slope(qh, qe) - 4.0), 0.2}};
}

std::vector<Measure> frenet_exactness() {
  const FrenetFrame f = frenet_frame(scenario::helix_jet(1.0, 1.0));
  return {{"|kappa - 1/2|", std::abs(f.kappa() - 0.5), 1e-12},
          {"|tau - 1/2|", std::abs(f.tau() - 0.5), 1e-12}};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "solution integrity", solution_integrity},
      {2, "conservation of p, l, H", conservation},
      {3, "scalar identities", scalar_identities},
      {4, "formulation equivalence", formulation_equivalence},
      {5, "constraint preservation", constraint_preservation},
      {6, "Noether machinery", noether_machinery},
      {7, "degenerate branches", degenerate_branches},
      {8, "closed elastica", closed_elastica},
      {9, "order checks", order_checks},
      {10, "Frenet exactness", frenet_exactness},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    std::vector<Measure> ms;
    std::string error;
    try {
      ms = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool ok = error.empty();
    for (const Measure& m : ms) ok = ok && m.ok();
    std::printf("criterion %2d %-26s %s\n", c.id, c.title.c_str(), ok ? "PASS" : "FAIL");
    for (const Measure& m : ms) {
      std::printf("    %-44s %.3e <= %.0e %s\n", m.what.c_str(), m.value, m.limit,
                  m.ok() ? "ok" : "EXCEEDED");
    }
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    failed += ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
