#pragma once

#include "elastica/ode.hpp"
#include "elastica/types.hpp"

namespace elastica {

/// tau = c / kappa^2. Returns 0 when c = 0, whatever kappa is.
double torsion_from_c(double kappa, double c);

struct ScalarRates {
  double kappa_dot;
  double kappa_ddot;
};

/// kappa'' = -kappa^3/2 + c^2/kappa^3. With c = 0 kappa is treated as a signed
/// curvature and may pass through zero.
ScalarRates scalar_rhs(double kappa, double kappa_dot, double c);

/// kappa'^2 + kappa^4/4 + c^2/kappa^2, constant along solutions.
double first_integral(double kappa, double kappa_dot, double c);

struct MomentumConstants {
  double c;
  double energy_level;
};

/// c = -<l,p>/4 and the level |p|^2/4 of the first integral.
MomentumConstants constants_from_momenta(const ConservedSet& cs);

/// RK4 (or RK45) integration of the scalar equation on the grid of `opt`.
/// Throws IntegrationError if kappa reaches the frame threshold while c != 0.
CurvatureTrace integrate_scalar(double kappa0, double kappa_dot0, double c,
                                const ode::RunOptions& opt = {}, double s0 = 0.0);

}  // namespace elastica
