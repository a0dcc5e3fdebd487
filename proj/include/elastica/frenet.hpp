#pragma once

#include "elastica/types.hpp"

namespace elastica {

/// Frame, curvature and torsion of an arclength jet. T and N are normalized
/// from xdot and the part of xddot orthogonal to it, so jets a little off the
/// gauge still yield an orthonormal frame. Throws FrameUndefined for
/// kappa <= kKappaMin and GaugeError off the gauge by more than kGaugeTolerance.
FrenetFrame frenet_frame(const JetState& j);

struct FrameDerivative {
  Vec3 dT;
  Vec3 dN;
  Vec3 dB;
};

/// Tdot = kappa N, Ndot = -kappa T + tau B, Bdot = -tau N.
FrameDerivative frenet_rhs(const FrenetFrame& f);

/// Arclength jet with xdot = T, xddot = kappa N and
/// xdddot = kappa_dot N - kappa^2 T + kappa tau B.
JetState jet_from_frame(const Vec3& x, const FrenetFrame& f, double kappa_dot, double t = 0.0);

/// x'''' = -3 kappa kappa' T + (kappa'' - kappa^3 - kappa tau^2) N + (2 kappa' tau + kappa tau') B.
Vec3 fourth_derivative_frame(const FrenetFrame& f, double kappa_dot, double kappa_ddot,
                             double tau_dot);

}  // namespace elastica
