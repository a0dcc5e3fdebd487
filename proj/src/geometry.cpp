#include <cmath>
#include <string>

#include "elastica/types.hpp"
#include "elastica/vec3.hpp"

namespace elastica {

Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n == 0.0) throw DegenerateInput("normalized: zero vector");
  return a / n;
}

Split split_parallel(const Vec3& v, const Vec3& direction) {
  const double d2 = norm_sq(direction);
  if (!(d2 > 0.0)) throw DegenerateInput("split_parallel: zero direction");
  const Vec3 parallel = (dot(v, direction) / d2) * direction;
  return {parallel, v - parallel};
}

JetState JetState::arclength(double t, const Vec3& x, const Vec3& xdot, const Vec3& xddot,
                             const Vec3& xdddot) {
  JetState j(t, x, xdot, xddot, xdddot);
  require_arclength(j, kRepresentationTolerance, "JetState::arclength");
  return j;
}

void require_arclength(const JetState& j, double tol, const char* where) {
  const ArclengthResiduals r = j.arclength_residuals();
  if (!(r.max_abs() <= tol)) {
    throw GaugeError(std::string(where) + ": jet is not in the arclength gauge (residual " +
                     std::to_string(r.max_abs()) + ")");
  }
}

FrenetFrame::FrenetFrame(const Vec3& T, const Vec3& N, const Vec3& B, double kappa, double tau)
    : T_(T), N_(N), B_(B), kappa_(kappa), tau_(tau) {
  if (!std::isfinite(kappa) || !std::isfinite(tau)) {
    throw DegenerateInput("FrenetFrame: non-finite curvature or torsion");
  }
  if (kappa < 0.0) throw DegenerateInput("FrenetFrame: negative curvature");
  constexpr double tol = kRepresentationTolerance;
  const bool unit = std::abs(norm(T) - 1.0) <= tol && std::abs(norm(N) - 1.0) <= tol &&
                    std::abs(norm(B) - 1.0) <= tol;
  const bool orthogonal =
      std::abs(dot(T, N)) <= tol && std::abs(dot(T, B)) <= tol && std::abs(dot(N, B)) <= tol;
  const bool right_handed = norm(cross(T, N) - B) <= tol;
  if (!unit || !orthogonal || !right_handed) {
    throw DegenerateInput("FrenetFrame: (T, N, B) is not a right-handed orthonormal frame");
  }
}

}  // namespace elastica
