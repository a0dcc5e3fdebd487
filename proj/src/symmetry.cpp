#include "elastica/symmetry.hpp"

#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "elastica/lagrangian.hpp"

namespace elastica {

namespace {

constexpr double kSpotStep = 1e-4;
constexpr double kSpotTolerance = 1e-6;
constexpr double kAffineTolerance = 1e-9;

void expect_close(double supplied, double estimate, double tol, const char* what) {
  if (!(std::abs(supplied - estimate) <= tol * std::max(1.0, std::abs(supplied)))) {
    throw DegenerateInput(std::string("SymmetryField: ") + what + " (supplied " +
                          std::to_string(supplied) + ", estimated " + std::to_string(estimate) + ")");
  }
}

void check_tau(const SymmetryField::TauFn& tau, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double h = kSpotStep;
  for (int k = 0; k < 5; ++k) {
    const double t = u(rng);
    const TauJet c = tau(t), ahead = tau(t + h), behind = tau(t - h);
    expect_close(c.tau_dot, (ahead.tau - behind.tau) / (2 * h), kSpotTolerance, "tau_dot mismatch");
    expect_close(c.tau_ddot, (ahead.tau_dot - behind.tau_dot) / (2 * h), kSpotTolerance,
                 "tau_ddot mismatch");
    expect_close(c.tau_dddot, (ahead.tau_ddot - behind.tau_ddot) / (2 * h), kSpotTolerance,
                 "tau_dddot mismatch");
  }
}

void check_xi(const SymmetryField::XiFn& xi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double h = kSpotStep;
  const XiJet first = xi(u(rng), Vec3(u(rng), u(rng), u(rng)));
  for (int k = 0; k < 5; ++k) {
    const double t = u(rng);
    const Vec3 x(u(rng), u(rng), u(rng));
    const XiJet c = xi(t, x);
    const Vec3 dt = (xi(t + h, x).xi - xi(t - h, x).xi) / (2 * h);
    for (std::size_t i = 0; i < 3; ++i) {
      expect_close(c.xi_t[i], dt[i], kSpotTolerance, "xi_t mismatch");
      expect_close(c.xi_t[i], first.xi_t[i], kAffineTolerance, "xi is not affine in t");
    }
    const Vec3 basis[3] = {kE1, kE2, kE3};
    for (std::size_t col = 0; col < 3; ++col) {
      const Vec3 dx = (xi(t, x + h * basis[col]).xi - xi(t, x - h * basis[col]).xi) / (2 * h);
      for (std::size_t row = 0; row < 3; ++row) {
        expect_close(c.xi_x.m[row][col], dx[row], kSpotTolerance, "xi_x mismatch");
        expect_close(c.xi_x.m[row][col], first.xi_x.m[row][col], kAffineTolerance,
                     "xi is not affine in x");
      }
    }
  }
}

}  // namespace

SymmetryField::SymmetryField(TauFn tau, XiFn xi, BoundaryFn boundary)
    : tau_(std::move(tau)), xi_(std::move(xi)), boundary_(std::move(boundary)) {
  if (!tau_ || !xi_) throw DegenerateInput("SymmetryField: tau and xi are required");
  std::mt19937_64 rng(20240601);
  check_tau(tau_, rng);
  check_xi(xi_, rng);
}

SymmetryField SymmetryField::translation(const Vec3& direction) {
  return SymmetryField([](double) { return TauJet{}; },
                       [direction](double, const Vec3&) {
                         return XiJet{direction, Vec3{}, Mat3::zero()};
                       });
}

SymmetryField SymmetryField::rotation(const Vec3& axis) {
  return SymmetryField([](double) { return TauJet{}; },
                       [axis](double, const Vec3& x) {
                         return XiJet{cross(axis, x), Vec3{}, Mat3::cross_matrix(axis)};
                       });
}

SymmetryField SymmetryField::time_translation() {
  return SymmetryField([](double) { return TauJet{1.0, 0.0, 0.0, 0.0}; },
                       [](double, const Vec3&) { return XiJet{Vec3{}, Vec3{}, Mat3::zero()}; });
}

SymmetryField SymmetryField::reparametrization(TauFn tau) {
  return SymmetryField(std::move(tau),
                       [](double, const Vec3&) { return XiJet{Vec3{}, Vec3{}, Mat3::zero()}; });
}

Prolongation prolong(const SymmetryField& X, const JetState& j) {
  const TauJet tj = X.tau(j.t);
  const XiJet xj = X.xi(j.t, j.x);
  // Total derivatives of an affine xi: the x-Jacobian acts on each jet slot.
  const Vec3 xi1 = xj.xi_t + xj.xi_x * j.xdot;
  const Vec3 xi2 = xj.xi_x * j.xddot;
  const Vec3 xi3 = xj.xi_x * j.xdddot;
  return {tj.tau, xj.xi, xi1 - tj.tau_dot * j.xdot,
          xi2 - (2.0 * tj.tau_dot) * j.xddot - tj.tau_ddot * j.xdot,
          xi3 - (3.0 * tj.tau_dot) * j.xdddot - (3.0 * tj.tau_ddot) * j.xddot -
              tj.tau_dddot * j.xdot};
}

double noether_charge(const SymmetryField& X, const JetState& j) {
  const Momenta m = ostrogradski_momenta(j);
  const TauJet tj = X.tau(j.t);
  const XiJet xj = X.xi(j.t, j.x);
  const Vec3 q = xj.xi - tj.tau * j.xdot;
  const Vec3 q_dot = xj.xi_t + xj.xi_x * j.xdot - tj.tau_dot * j.xdot - tj.tau * j.xddot;
  return lagrangian_density(j) * tj.tau + dot(m.p_x, q) + dot(m.p_xdot, q_dot) + X.boundary(j);
}

double contraction_with_cartan_form(const SymmetryField& X, const JetState& j) {
  const Prolongation pr = prolong(X, j);
  const Momenta m = ostrogradski_momenta(j);
  // Theta = L dt + p_x (dx - xdot dt) + p_xdot (dxdot - xddot dt).
  const double dt = pr.tau;
  const Vec3 theta1 = pr.xi - dt * j.xdot;
  const Vec3 theta2 = pr.first - dt * j.xddot;
  return lagrangian_density(j) * dt + dot(m.p_x, theta1) + dot(m.p_xdot, theta2) + X.boundary(j);
}

double noether_identity_residual(const SymmetryField& X, const CurveTrace& trace,
                                 std::size_t index) {
  const Vec3 el = el_residual(trace, index);
  const double dJ = (noether_charge(X, trace[index + 1]) - noether_charge(X, trace[index - 1])) /
                    (2.0 * trace.step());
  const JetState& j = trace[index];
  const Vec3 q = X.xi(j.t, j.x).xi - X.tau(j.t).tau * j.xdot;
  return dJ + dot(el, q);
}

}  // namespace elastica
