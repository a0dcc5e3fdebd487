#pragma once

#include <vector>

#include "elastica/ode.hpp"
#include "elastica/types.hpp"

namespace elastica {

/// |q x qdot|^2 / |q|^5 + lambda |q| - <c, q>. Throws DomainError for q = 0.
double reduced_lagrangian(const Vec3& q, const Vec3& qdot, double lambda, const Vec3& c);

/// (lambda - kappa^2) T - 2 kappa' N - 2 kappa tau B - c. Along a solution of
/// the length-constrained problem the first four terms are a constant vector;
/// at lambda = 0 that vector is the free momentum p.
Vec3 closed_el_residual(const FrenetFrame& f, double kappa_dot, double lambda, const Vec3& c);

/// 4 kappa'^2 + (lambda - kappa^2)^2 + j^2/(4 kappa^2) - c_norm^2.
/// Throws SingularTorsion for kappa <= kKappaMin.
double foltinek_invariant(double kappa, double kappa_prime, double lambda, double c_norm, double j);

/// The same relation with j = -4 kappa^2 tau substituted.
double foltinek_invariant_frame(double kappa, double kappa_prime, double tau, double lambda,
                                double c_norm);

/// j = -4 kappa^2 tau.
double angular_momentum_j(double kappa, double tau);

/// kappa'' = (lambda kappa - kappa^3)/2 + c^2/kappa^3 with c = kappa^2 tau fixed.
double closed_kappa_ddot(double kappa, double c, double lambda);

/// Scalar run of the constrained equation; the returned trace carries c.
CurvatureTrace integrate_closed_scalar(double kappa0, double kappa_dot0, double c, double lambda,
                                       const ode::RunOptions& opt = {});

/// One sample of a constrained run integrated in frame form.
struct ClosedSample {
  double s;
  Vec3 x;
  FrenetFrame frame;
  double kappa_dot;
};

/// Integrates x' = T together with the Frenet equations, the constrained
/// curvature equation and tau = c/kappa^2, from a jet's frame data.
std::vector<ClosedSample> integrate_closed_frames(const Vec3& x0, const FrenetFrame& f0,
                                                  double kappa_dot0, double lambda,
                                                  const ode::RunOptions& opt = {});

/// Jets along a frame run: xdot = T, xddot = kappa N, xdddot from the frame.
CurveTrace closed_curve_trace(const std::vector<ClosedSample>& run, double step);

}  // namespace elastica
