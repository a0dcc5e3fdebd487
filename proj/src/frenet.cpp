#include "elastica/frenet.hpp"

namespace elastica {

FrenetFrame frenet_frame(const JetState& j) {
  require_arclength(j, kGaugeTolerance, "frenet_frame");
  const Vec3 T = normalized(j.xdot);
  const Vec3 a_perp = perpendicular_part(j.xddot, T);
  const double kappa = norm(a_perp);
  if (!(kappa > kKappaMin)) {
    throw FrameUndefined("frenet_frame: curvature " + std::to_string(kappa) +
                         " is below the frame threshold");
  }
  const Vec3 N = a_perp / kappa;
  const double tau = dot(cross(j.xdot, j.xddot), j.xdddot) / (kappa * kappa);
  return FrenetFrame(T, N, cross(T, N), kappa, tau);
}

FrameDerivative frenet_rhs(const FrenetFrame& f) {
  return {f.kappa() * f.N(), -f.kappa() * f.T() + f.tau() * f.B(), -f.tau() * f.N()};
}

JetState jet_from_frame(const Vec3& x, const FrenetFrame& f, double kappa_dot, double t) {
  const double k = f.kappa();
  return JetState(t, x, f.T(), k * f.N(),
                  kappa_dot * f.N() - (k * k) * f.T() + (k * f.tau()) * f.B());
}

Vec3 fourth_derivative_frame(const FrenetFrame& f, double kappa_dot, double kappa_ddot,
                             double tau_dot) {
  const double k = f.kappa(), tau = f.tau();
  return (-3.0 * k * kappa_dot) * f.T() + (kappa_ddot - k * k * k - k * tau * tau) * f.N() +
         (2.0 * kappa_dot * tau + k * tau_dot) * f.B();
}

}  // namespace elastica
