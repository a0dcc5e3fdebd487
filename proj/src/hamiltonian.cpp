#include "elastica/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "elastica/lagrangian.hpp"

namespace elastica {

namespace {

double speed(const PhaseState& ps, const char* where) {
  const double v = norm(ps.xdot);
  if (!(v > 0.0)) throw DomainError(std::string(where) + ": xdot = 0");
  return v;
}

void require_parallel(const Vec3& v, const Vec3& xdot, const char* what) {
  const Vec3 perp = perpendicular_part(v, xdot);
  if (norm(perp) > kRepresentationTolerance * std::max(1.0, norm(v))) {
    throw DegenerateInput(std::string("legendre_fiber: ") + what + " is not parallel to xdot");
  }
}

}  // namespace

PhaseState legendre(const JetState& j) {
  const Momenta m = ostrogradski_momenta(j);
  return PhaseState(j.t, j.x, j.xdot, m.p_x, m.p_xdot, 0.0);
}

double ConstraintResiduals::max_abs() const {
  return std::max({std::abs(p_t), std::abs(pdot_xdot), std::abs(h)});
}

double constraint_h(const PhaseState& ps) {
  const double v = speed(ps, "constraint_h");
  return v * v * norm_sq(ps.p_xdot) / 4.0 + dot(ps.p_x, ps.xdot) / v;
}

ConstraintResiduals constraint_residuals(const PhaseState& ps) {
  return {ps.p_t, dot(ps.p_xdot, ps.xdot), constraint_h(ps)};
}

JetState legendre_fiber(const PhaseState& ps, const Vec3& xddot_par, const Vec3& xdddot_par,
                        double tol) {
  const ConstraintResiduals r = constraint_residuals(ps);
  if (!(r.max_abs() <= tol)) {
    throw NotInRange("legendre_fiber: phase point is off the constraint set (residual " +
                     std::to_string(r.max_abs()) + ")");
  }
  require_parallel(xddot_par, ps.xdot, "xddot_par");
  require_parallel(xdddot_par, ps.xdot, "xdddot_par");
  const double v = norm(ps.xdot);
  const double v3 = v * v * v;
  const Vec3 xddot_perp = (0.5 * v3) * perpendicular_part(ps.p_xdot, ps.xdot);
  const Vec3 p_x_perp = perpendicular_part(ps.p_x, ps.xdot);
  const Vec3 xdddot_perp =
      0.5 * (-v3 * p_x_perp + (3.0 * v * dot(ps.xdot, xddot_par)) * ps.p_xdot);
  return JetState(ps.t, ps.x, ps.xdot, xddot_perp + xddot_par, xdddot_perp + xdddot_par);
}

JetState arclength_jet(const PhaseState& ps, double tol) {
  const double v = speed(ps, "arclength_jet");
  const double v3 = v * v * v;
  const double a2 = 0.25 * v3 * v3 * norm_sq(perpendicular_part(ps.p_xdot, ps.xdot));
  return legendre_fiber(ps, Vec3{}, (-a2 / (v * v)) * ps.xdot, tol);
}

namespace {

void require_on_manifold(const PhaseState& ps, const char* where) {
  const double r = std::max(constraint_residuals(ps).max_abs(), std::abs(norm(ps.xdot) - 1.0));
  if (!(r <= kOffManifoldTolerance)) {
    throw OffManifold(std::string(where) +
                      ": state is off the arclength constraint manifold (residual " +
                      std::to_string(r) + ")");
  }
}

// Unchecked arclength flow; RK stages sit O(h^2) off the constraint set.
PhaseVelocity arclength_flow(const PhaseState& ps) {
  PhaseVelocity d;
  d.dt = 1.0;
  d.dx = ps.xdot;
  d.dxdot = 0.5 * ps.p_xdot;
  d.dp_xdot = -ps.p_x + (3.0 * dot(ps.p_x, ps.xdot)) * ps.xdot;
  return d;
}

}  // namespace

PhaseVelocity ham_rhs(const PhaseState& ps) {
  require_on_manifold(ps, "ham_rhs");
  return arclength_flow(ps);
}

PhaseVelocity ham_rhs_general(const PhaseState& ps) {
  const double v = speed(ps, "ham_rhs_general");
  PhaseVelocity d;
  d.dt = 1.0;
  d.dx = ps.xdot / v;
  d.dxdot = (0.5 * v * v) * ps.p_xdot;
  d.dp_xdot = -ps.p_x / v +
              (-0.5 * norm_sq(ps.p_xdot) + dot(ps.p_x, ps.xdot) / (v * v * v)) * ps.xdot;
  return d;
}

PhaseState project_constraints(const PhaseState& ps) {
  const Vec3 T = normalized(ps.xdot);
  const Vec3 p_xdot = perpendicular_part(ps.p_xdot, T);
  const Vec3 p_x = ps.p_x + (-0.25 * norm_sq(p_xdot) - dot(ps.p_x, T)) * T;
  return PhaseState(ps.t, ps.x, T, p_x, p_xdot, 0.0);
}

ode::State<14> pack(const PhaseState& ps) {
  ode::State<14> y;
  y[0] = ps.t;
  const Vec3* parts[4] = {&ps.x, &ps.xdot, &ps.p_x, &ps.p_xdot};
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 3; ++i) y[1 + 3 * k + i] = (*parts[k])[i];
  }
  y[13] = ps.p_t;
  return y;
}

PhaseState unpack_phase(const ode::State<14>& y) {
  auto v = [&](std::size_t k) { return Vec3(y[1 + 3 * k], y[2 + 3 * k], y[3 + 3 * k]); };
  return PhaseState(y[0], v(0), v(1), v(2), v(3), y[13]);
}

PhaseTrace integrate_flow(const PhaseState& initial, const ode::RunOptions& opt) {
  require_on_manifold(initial, "integrate_flow");
  auto rhs = [](const ode::State<14>& y) {
    const PhaseVelocity d = arclength_flow(unpack_phase(y));
    ode::State<14> out;
    out[0] = d.dt;
    const Vec3* parts[4] = {&d.dx, &d.dxdot, &d.dp_x, &d.dp_xdot};
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t i = 0; i < 3; ++i) out[1 + 3 * k + i] = (*parts[k])[i];
    }
    out[13] = d.dp_t;
    return out;
  };
  ode::Projector<14> projector;
  if (opt.project) {
    projector = [](const ode::State<14>& y) { return pack(project_constraints(unpack_phase(y))); };
  }
  const auto states = ode::run<14>(rhs, pack(initial), opt, projector);
  std::vector<PhaseState> samples;
  samples.reserve(states.size());
  for (std::size_t n = 0; n < states.size(); ++n) {
    PhaseState ps = unpack_phase(states[n]);
    // Accumulated rounding in t would break the uniform-grid check.
    ps.t = initial.t + static_cast<double>(n) * opt.step;
    samples.push_back(ps);
  }
  return PhaseTrace(opt.step, std::move(samples), "arclength", ode::method_name(opt.method));
}

CurveTrace to_curve_trace(const PhaseTrace& trace) {
  std::vector<JetState> jets;
  jets.reserve(trace.size());
  for (const PhaseState& ps : trace) jets.push_back(arclength_jet(ps, kGaugeTolerance));
  return CurveTrace(trace.step(), std::move(jets), trace.gauge(), trace.integrator());
}

double diff_momentum(const PhaseState& ps, double tau, double tau_dot) {
  return tau * ps.p_t - tau_dot * dot(ps.p_xdot, ps.xdot);
}

double spherical_radial_momentum(const PhaseState& ps) {
  return dot(ps.p_xdot, ps.xdot) / speed(ps, "spherical_radial_momentum");
}

double quartic_first_integral(const PhaseState& ps) {
  const double u = dot(ps.p_x, ps.xdot);
  const double du = 0.5 * dot(ps.p_x, ps.p_xdot);
  return du * du + norm_sq(ps.p_x) * u - u * u * u;
}

Vec3 phase_angular_momentum(const PhaseState& ps) {
  return cross(ps.x, ps.p_x) + cross(ps.xdot, ps.p_xdot);
}

}  // namespace elastica
