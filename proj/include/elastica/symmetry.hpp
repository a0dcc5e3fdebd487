#pragma once

#include <cstddef>
#include <functional>

#include "elastica/types.hpp"
#include "elastica/vec3.hpp"

namespace elastica {

/// tau and its first three derivatives at one parameter value.
struct TauJet {
  double tau = 0.0;
  double tau_dot = 0.0;
  double tau_ddot = 0.0;
  double tau_dddot = 0.0;
};

/// xi with its partial derivatives at one point (t, x).
struct XiJet {
  Vec3 xi;
  Vec3 xi_t;
  Mat3 xi_x;
};

/// Vector field X = tau(t) d/dt + xi(t, x) d/dx on configuration space.
///
/// xi must be affine in (t, x): xi = A x + v t + b. Higher total derivatives
/// along a jet then reduce to A applied to the jet slots. The constructor
/// checks the supplied derivatives against central differences at five
/// pseudo-random points (fixed seed) and rejects non-affine xi.
class SymmetryField {
 public:
  using TauFn = std::function<TauJet(double)>;
  using XiFn = std::function<XiJet(double, const Vec3&)>;
  /// Boundary term F(j) for symmetries that hold up to a total differential.
  using BoundaryFn = std::function<double(const JetState&)>;

  SymmetryField(TauFn tau, XiFn xi, BoundaryFn boundary = {});

  static SymmetryField translation(const Vec3& direction);
  /// Infinitesimal rotation x -> axis x x about the origin.
  static SymmetryField rotation(const Vec3& axis);
  static SymmetryField time_translation();
  /// Pure reparametrization field tau(t) d/dt.
  static SymmetryField reparametrization(TauFn tau);

  TauJet tau(double t) const { return tau_(t); }
  XiJet xi(double t, const Vec3& x) const { return xi_(t, x); }
  double boundary(const JetState& j) const { return boundary_ ? boundary_(j) : 0.0; }

 private:
  TauFn tau_;
  XiFn xi_;
  BoundaryFn boundary_;
};

/// Coefficients of the third prolongation at a jet: tau, xi and the
/// coefficients of d/dxdot, d/dxddot, d/dxdddot.
struct Prolongation {
  double tau = 0.0;
  Vec3 xi;
  Vec3 first;
  Vec3 second;
  Vec3 third;
};

Prolongation prolong(const SymmetryField& X, const JetState& j);

/// Noether charge L tau + <p_x, xi - tau xdot> + <p_xdot, d/dt(xi - tau xdot)> + F.
double noether_charge(const SymmetryField& X, const JetState& j);

/// The same charge evaluated as the contraction of the prolonged field with
/// the Cartan form L dt + p_x (dx - xdot dt) + p_xdot (dxdot - xddot dt).
double contraction_with_cartan_form(const SymmetryField& X, const JetState& j);

/// Central difference of the charge plus <EL, xi - tau xdot> at `index`.
/// Vanishes up to differencing error on any smooth trace.
double noether_identity_residual(const SymmetryField& X, const CurveTrace& trace,
                                 std::size_t index);

}  // namespace elastica
