#pragma once

#include <vector>

#include "elastica/ode.hpp"
#include "elastica/types.hpp"

namespace elastica {

enum class Branch { generic, planar, degenerate_line };

const char* branch_name(Branch b) noexcept;

/// Chooses the reconstruction branch from the conserved momenta and the
/// initial curvature and torsion. `tol` is relative to max(1, |p|^2).
Branch classify_case(const ConservedSet& cs, double kappa0, double tau0, double tol = 1e-10);

struct FrameDE {
  Vec3 D;
  Vec3 E;
};

/// D = xdot x p / |xdot x p| and E = (xdot x p) x p / |(xdot x p) x p|.
/// Throws BranchError when |xdot x p|^2 <= 1e-10 |p|^2.
FrameDE frame_DE(const JetState& j, const Vec3& p);

/// Rotation rate of (D, E) in the plane orthogonal to p:
///   D' = omega E,  E' = -omega D,  omega = -<l,p>|p| / (2 (|p|^2 - kappa^4)).
/// Throws BranchError when |p|^2 - kappa^4 <= 1e-10 |p|^2.
double rotation_rate(double kappa, const ConservedSet& cs);

/// phi(s) = integral of rotation_rate from the first sample, fourth order.
std::vector<double> phase_phi(const CurvatureTrace& kappa, const ConservedSet& cs);

/// (D, E) after rotating (D0, E0) through phi.
FrameDE rotate_frame(const Vec3& D0, const Vec3& E0, double phi);

/// Curve through x0 whose velocity is -kappa^2 p/|p|^2 - (sqrt(|p|^2-kappa^4)/|p|) E(s).
/// Jets carry the analytic xddot and xdddot = -(p + 3 kappa^2 xdot)/2.
CurveTrace reconstruct_curve(const CurvatureTrace& kappa, const ConservedSet& cs, const Vec3& x0,
                             const Vec3& D0, const Vec3& E0);

/// Planar closed form for a signed curvature trace and fixed binormal B:
///   x = x0 - (int kappa^2 / |p|^2) p + (2 (kappa(s0) - kappa(s)) / |p|^2) p x B.
CurveTrace reconstruct_planar(const CurvatureTrace& kappa, const ConservedSet& cs, const Vec3& x0,
                              const Vec3& B);

/// Full pipeline from an arclength jet: conserved momenta, scalar reduction,
/// and the branch-appropriate reconstruction (a straight line when degenerate).
CurveTrace reconstruct(const JetState& initial, const ode::RunOptions& opt = {});

}  // namespace elastica
