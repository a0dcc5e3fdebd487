#include "elastica/scalar.hpp"

#include <cmath>
#include <string>

namespace elastica {

namespace {

void require_regular(double kappa, double c, const char* where) {
  if (c != 0.0 && !(std::abs(kappa) > kKappaMin)) {
    throw SingularTorsion(std::string(where) + ": kappa " + std::to_string(kappa) +
                          " at or below the frame threshold with c != 0");
  }
}

}  // namespace

double torsion_from_c(double kappa, double c) {
  if (c == 0.0) return 0.0;
  require_regular(kappa, c, "torsion_from_c");
  return c / (kappa * kappa);
}

ScalarRates scalar_rhs(double kappa, double kappa_dot, double c) {
  require_regular(kappa, c, "scalar_rhs");
  const double k3 = kappa * kappa * kappa;
  const double twist = c == 0.0 ? 0.0 : c * c / k3;
  return {kappa_dot, -0.5 * k3 + twist};
}

double first_integral(double kappa, double kappa_dot, double c) {
  require_regular(kappa, c, "first_integral");
  const double k2 = kappa * kappa;
  const double twist = c == 0.0 ? 0.0 : c * c / k2;
  return kappa_dot * kappa_dot + 0.25 * k2 * k2 + twist;
}

MomentumConstants constants_from_momenta(const ConservedSet& cs) {
  return {-0.25 * dot(cs.l, cs.p), 0.25 * norm_sq(cs.p)};
}

CurvatureTrace integrate_scalar(double kappa0, double kappa_dot0, double c,
                                const ode::RunOptions& opt, double s0) {
  require_regular(kappa0, c, "integrate_scalar");
  auto rhs = [c](const ode::State<2>& y) {
    const ScalarRates r = scalar_rhs(y[0], y[1], c);
    return ode::State<2>{r.kappa_dot, r.kappa_ddot};
  };
  const auto states = ode::run<2>(rhs, ode::State<2>{kappa0, kappa_dot0}, opt);
  CurvatureTrace out;
  out.s0 = s0;
  out.step = opt.step;
  out.c = c;
  out.kappa.reserve(states.size());
  out.kappa_dot.reserve(states.size());
  for (const auto& y : states) {
    out.kappa.push_back(y[0]);
    out.kappa_dot.push_back(y[1]);
  }
  return out;
}

}  // namespace elastica
