#include "elastica/lagrangian.hpp"

#include <cmath>
#include <vector>

namespace elastica {

namespace {

double checked_speed(const Vec3& xdot, const char* where) {
  const double v = norm(xdot);
  if (!(v > 0.0)) throw DomainError(std::string(where) + ": xdot = 0");
  return v;
}

void require_stencil(const CurveTrace& trace, std::size_t index, const char* where) {
  if (index < 2 || index + 2 >= trace.size()) {
    throw StencilError(std::string(where) + ": index " + std::to_string(index) +
                       " leaves no room for a 5-point stencil in a trace of " +
                       std::to_string(trace.size()) + " samples");
  }
}

}  // namespace

double lagrangian_density(const JetState& j) {
  const double v = checked_speed(j.xdot, "lagrangian_density");
  const double va = dot(j.xdot, j.xddot);
  return norm_sq(j.xddot) / (v * v * v) - va * va / std::pow(v, 5);
}

LagrangianPartials lagrangian_partials(const JetState& j) {
  const double v = checked_speed(j.xdot, "lagrangian_partials");
  const double v3 = v * v * v, v5 = v3 * v * v, v7 = v5 * v * v;
  const double va = dot(j.xdot, j.xddot);
  const double a2 = norm_sq(j.xddot);
  return {(-3.0 * a2 / v5 + 5.0 * va * va / v7) * j.xdot - (2.0 * va / v5) * j.xddot,
          (2.0 / v3) * j.xddot - (2.0 * va / v5) * j.xdot};
}

Momenta ostrogradski_momenta(const JetState& j) {
  const double v = checked_speed(j.xdot, "ostrogradski_momenta");
  const double v3 = v * v * v, v5 = v3 * v * v, v7 = v5 * v * v;
  const Vec3& xd = j.xdot;
  const double va = dot(xd, j.xddot);
  const double vj = dot(xd, j.xdddot);
  const double a2 = norm_sq(j.xddot);

  const Vec3 p_xdot = (2.0 / v3) * perpendicular_part(j.xddot, xd);
  const Vec3 p_x = (-2.0 / v3) * j.xdddot + (2.0 * vj / v5 - a2 / v5 - 5.0 * va * va / v7) * xd +
                   (6.0 * va / v5) * j.xddot;
  return {p_x, p_xdot};
}

double energy(const JetState& j) {
  const Momenta m = ostrogradski_momenta(j);
  return dot(m.p_x, j.xdot) + dot(m.p_xdot, j.xddot) - lagrangian_density(j);
}

namespace {

// RK stages leave the arclength conditions by O(h^2), so the integrator
// evaluates the formula without the gauge check.
Vec3 fourth_derivative(const JetState& j) {
  return -1.5 * norm_sq(j.xddot) * j.xddot - 3.0 * dot(j.xddot, j.xdddot) * j.xdot;
}

}  // namespace

Vec3 el_rhs_arclength(const JetState& j) {
  require_arclength(j, kGaugeTolerance, "el_rhs_arclength");
  return fourth_derivative(j);
}

Vec3 el_residual(const CurveTrace& trace, std::size_t index) {
  require_stencil(trace, index, "el_residual");
  const Vec3 ahead = ostrogradski_momenta(trace[index + 1]).p_x;
  const Vec3 behind = ostrogradski_momenta(trace[index - 1]).p_x;
  return -(ahead - behind) / (2.0 * trace.step());
}

Vec3 el_residual_expanded(const CurveTrace& trace, std::size_t index) {
  require_stencil(trace, index, "el_residual_expanded");
  const double h = trace.step();
  auto partials = [&](std::size_t k) { return lagrangian_partials(trace[k]); };
  const LagrangianPartials m2 = partials(index - 2), m1 = partials(index - 1), c = partials(index),
                           p1 = partials(index + 1), p2 = partials(index + 2);
  const Vec3 d1 = (p1.d_xdot - m1.d_xdot) / (2.0 * h);
  const Vec3 d2 = (p2.d_xddot - 2.0 * c.d_xddot + m2.d_xddot) / (4.0 * h * h);
  return d2 - d1;
}

ConservedSet conserved_momenta(const JetState& j) {
  require_arclength(j, kGaugeTolerance, "conserved_momenta");
  const Vec3 p = -2.0 * j.xdddot - 3.0 * norm_sq(j.xddot) * j.xdot;
  const Vec3 l = cross(j.x, p) + 2.0 * cross(j.xdot, j.xddot);
  return {p, l, energy(j), dot(cross(j.xdot, j.xddot), j.xdddot)};
}

JetState project_arclength(const JetState& j) {
  const double sigma = checked_speed(j.xdot, "project_arclength");
  const Vec3 T = j.xdot / sigma;
  const double sigma_dot = dot(T, j.xddot);
  const Vec3 a_perp = perpendicular_part(j.xddot, T);
  const double sigma_ddot = norm_sq(a_perp) / sigma + dot(T, j.xdddot);

  // Chain rule for d/ds = (1/sigma) d/dt.
  const Vec3 k = a_perp / (sigma * sigma);
  const Vec3 third = (j.xdddot - sigma_ddot * T) / (sigma * sigma * sigma) -
                     (3.0 * sigma_dot / std::pow(sigma, 4)) * a_perp;

  const Vec3 T_exact = normalized(T);
  const Vec3 k_exact = perpendicular_part(k, T_exact);
  const Vec3 third_exact = perpendicular_part(third, T_exact) - norm_sq(k_exact) * T_exact;
  return JetState(j.t, j.x, T_exact, k_exact, third_exact);
}

ode::State<12> pack(const JetState& j) {
  ode::State<12> y;
  const Vec3* parts[4] = {&j.x, &j.xdot, &j.xddot, &j.xdddot};
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 3; ++i) y[3 * k + i] = (*parts[k])[i];
  }
  return y;
}

JetState unpack(const ode::State<12>& y, double t) {
  auto v = [&](std::size_t k) { return Vec3(y[3 * k], y[3 * k + 1], y[3 * k + 2]); };
  return JetState(t, v(0), v(1), v(2), v(3));
}

CurveTrace integrate_elastica(const JetState& initial, const ode::RunOptions& opt) {
  require_arclength(initial, kGaugeTolerance, "integrate_elastica");
  auto rhs = [](const ode::State<12>& y) {
    const JetState j = unpack(y, 0.0);
    const Vec3 x4 = fourth_derivative(j);
    ode::State<12> d;
    for (std::size_t i = 0; i < 3; ++i) {
      d[i] = y[3 + i];
      d[3 + i] = y[6 + i];
      d[6 + i] = y[9 + i];
      d[9 + i] = x4[i];
    }
    return d;
  };
  ode::Projector<12> projector;
  if (opt.project) {
    projector = [](const ode::State<12>& y) { return pack(project_arclength(unpack(y, 0.0))); };
  }
  const auto states = ode::run<12>(rhs, pack(initial), opt, projector);
  std::vector<JetState> samples;
  samples.reserve(states.size());
  for (std::size_t n = 0; n < states.size(); ++n) {
    samples.push_back(unpack(states[n], initial.t + static_cast<double>(n) * opt.step));
  }
  return CurveTrace(opt.step, std::move(samples), "arclength", ode::method_name(opt.method));
}

}  // namespace elastica
