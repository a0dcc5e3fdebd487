#pragma once

#include <cstddef>

#include "elastica/ode.hpp"
#include "elastica/types.hpp"

namespace elastica {

/// Canonical momenta of the second-order Lagrangian.
struct Momenta {
  Vec3 p_x;
  Vec3 p_xdot;
};

/// |xddot|^2/|xdot|^3 - <xdot,xddot>^2/|xdot|^5, i.e. kappa^2 |xdot|.
double lagrangian_density(const JetState& j);

/// Partial derivatives of the density with respect to xdot and xddot.
struct LagrangianPartials {
  Vec3 d_xdot;
  Vec3 d_xddot;
};
LagrangianPartials lagrangian_partials(const JetState& j);

/// p_xdot = dL/dxddot and p_x = dL/dxdot - d/dt p_xdot, evaluated in closed form.
Momenta ostrogradski_momenta(const JetState& j);

/// <p_x, xdot> + <p_xdot, xddot> - L. Vanishes identically by reparametrization
/// invariance; kept as an explicit check.
double energy(const JetState& j);

/// Fourth derivative of an arclength solution. Throws GaugeError when the jet
/// is more than kGaugeTolerance off the arclength conditions.
Vec3 el_rhs_arclength(const JetState& j);

/// Euler-Lagrange expression at trace sample `index`, using the reduced form
/// -d/dt p_x with a central difference. Needs two samples on either side.
Vec3 el_residual(const CurveTrace& trace, std::size_t index);

/// Same quantity from the unreduced form -d/dt dL/dxdot + d^2/dt^2 dL/dxddot,
/// with the second derivative taken as a nested central difference.
Vec3 el_residual_expanded(const CurveTrace& trace, std::size_t index);

/// p, l, H and c = <xdot x xddot, xdddot> for an arclength jet.
ConservedSet conserved_momenta(const JetState& j);

/// Reparametrizes the jet by arclength at the same point of the same curve,
/// then enforces the three arclength conditions exactly.
JetState project_arclength(const JetState& j);

/// Integrates the arclength Euler-Lagrange system from `initial`.
CurveTrace integrate_elastica(const JetState& initial, const ode::RunOptions& opt = {});

/// Packing used by the integrator: x, xdot, xddot, xdddot.
ode::State<12> pack(const JetState& j);
JetState unpack(const ode::State<12>& y, double t);

}  // namespace elastica
