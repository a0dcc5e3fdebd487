#pragma once

#include "elastica/ode.hpp"
#include "elastica/types.hpp"

namespace elastica {

/// Tolerance on each constraint residual before the arclength flow refuses a state.
inline constexpr double kOffManifoldTolerance = 1e-6;

/// Legendre-Ostrogradski map J^3 -> T*J^1. p_t is identically zero.
PhaseState legendre(const JetState& j);

struct ConstraintResiduals {
  double p_t = 0.0;
  double pdot_xdot = 0.0;
  double h = 0.0;

  double max_abs() const;
};

/// h = |xdot|^2 |p_xdot|^2 / 4 + <p_x, xdot> / |xdot|, reparametrization invariant.
double constraint_h(const PhaseState& ps);

/// (p_t, <p_xdot, xdot>, h); all three vanish on the range of `legendre`.
ConstraintResiduals constraint_residuals(const PhaseState& ps);

/// Jet over `ps` with the given components of xddot and xdddot along xdot.
/// Throws NotInRange when a constraint residual exceeds `tol`.
JetState legendre_fiber(const PhaseState& ps, const Vec3& xddot_par, const Vec3& xdddot_par,
                        double tol = kRepresentationTolerance);

/// The fiber point in the arclength gauge: xddot_par = 0,
/// xdddot_par = -|xddot|^2 xdot / |xdot|^2.
JetState arclength_jet(const PhaseState& ps, double tol = kRepresentationTolerance);

/// Tangent vector to T*J^1 in the coordinates (t, x, xdot, p_x, p_xdot, p_t).
struct PhaseVelocity {
  double dt = 0.0;
  Vec3 dx;
  Vec3 dxdot;
  Vec3 dp_x;
  Vec3 dp_xdot;
  double dp_t = 0.0;
};

/// Arclength flow of p_t + h:
///   x' = xdot, xdot' = p_xdot/2, p_xdot' = -p_x + 3 <p_x,xdot> xdot, p_x' = 0, t' = 1.
/// Throws OffManifold when |xdot| - 1 or a constraint residual exceeds kOffManifoldTolerance.
PhaseVelocity ham_rhs(const PhaseState& ps);

/// Hamiltonian vector field of p_t + h at any speed. Used to check that the
/// flow traces the same curve from every point of a reparametrization orbit.
PhaseVelocity ham_rhs_general(const PhaseState& ps);

/// Renormalizes xdot, removes the xdot-component of p_xdot, shifts p_x along
/// xdot so that h = 0, and zeroes p_t.
PhaseState project_constraints(const PhaseState& ps);

/// Integrates ham_rhs on the grid of `opt`; `opt.project` applies
/// project_constraints after every step.
PhaseTrace integrate_flow(const PhaseState& initial, const ode::RunOptions& opt = {});

/// Arclength jets along a phase trace, via arclength_jet with the looser
/// tolerance kGaugeTolerance.
CurveTrace to_curve_trace(const PhaseTrace& trace);

/// Momentum map of the reparametrization field tau d/dt: tau p_t - tau_dot <p_xdot, xdot>.
double diff_momentum(const PhaseState& ps, double tau, double tau_dot);

/// Radial momentum <p_xdot, xdot>/|xdot| in spherical coordinates on the xdot fibre.
double spherical_radial_momentum(const PhaseState& ps);

/// With u = <p_x, xdot> and u' = <p_x, p_xdot>/2 (its derivative along the
/// flow), returns u'^2 + |p_x|^2 u - u^3. Constant along the arclength flow,
/// equal to -<l, p>^2 / 4 on elastica data.
double quartic_first_integral(const PhaseState& ps);

/// l = x x p_x + xdot x p_xdot.
Vec3 phase_angular_momentum(const PhaseState& ps);

ode::State<14> pack(const PhaseState& ps);
PhaseState unpack_phase(const ode::State<14>& y);

}  // namespace elastica
