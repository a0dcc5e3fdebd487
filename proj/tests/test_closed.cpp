#include <gtest/gtest.h>

#include <cmath>

#include "elastica/closed.hpp"
#include "elastica/frenet.hpp"
#include "elastica/lagrangian.hpp"
#include "scenarios.hpp"

using namespace elastica;

namespace {

void expect_vec(const Vec3& a, const Vec3& b, double tol) {
  EXPECT_LE(norm(a - b), tol) << a << " vs " << b;
}

Vec3 momentum_of(const FrenetFrame& f, double kappa_dot, double lambda) {
  return closed_el_residual(f, kappa_dot, lambda, Vec3{});
}

}  // namespace

TEST(ReducedLagrangian, Oracles) {
  EXPECT_DOUBLE_EQ(reduced_lagrangian(kE1, kE2, 0.0, Vec3{}), 1.0);
  EXPECT_DOUBLE_EQ(reduced_lagrangian(kE1, kE2, 2.0, kE1), 2.0);
  const Vec3 q(0, 2, 0), c(0.5, 0.25, 1.0);
  EXPECT_DOUBLE_EQ(reduced_lagrangian(q, 3.0 * q, 1.5, c), 1.5 * 2.0 - dot(c, q));
  EXPECT_THROW(reduced_lagrangian(Vec3{}, kE1, 0.0, Vec3{}), DomainError);
}

TEST(ClosedElResidual, FreeMomentumAtZeroLambda) {
  const JetState g = scenario::generic_jet();
  const FrenetFrame f = frenet_frame(g);
  const Vec3 p = conserved_momenta(g).p;
  expect_vec(closed_el_residual(f, 0.3, 0.0, p), Vec3{}, 1e-15);
}

TEST(ClosedElResidual, UnitCircleBalancesAtLambdaOne) {
  expect_vec(closed_el_residual(FrenetFrame::standard(1.0, 0.0), 0.0, 1.0, Vec3{}), Vec3{}, 0.0);
}

TEST(ClosedElResidual, AffineInC) {
  const FrenetFrame f = FrenetFrame::standard(0.8, 0.3);
  const Vec3 c(0.1, -0.2, 0.3), dc(1.0, 2.0, -0.5);
  const Vec3 a = closed_el_residual(f, 0.4, 0.7, c);
  const Vec3 b = closed_el_residual(f, 0.4, 0.7, c + dc);
  expect_vec(b - a, -1.0 * dc, 1e-15);
}

TEST(Foltinek, Oracles) {
  EXPECT_DOUBLE_EQ(foltinek_invariant(1.0, 0.0, 0.0, 1.0, 0.0), 0.0);
  EXPECT_THROW(foltinek_invariant(0.0, 0.0, 0.0, 1.0, 0.0), SingularTorsion);
  EXPECT_DOUBLE_EQ(foltinek_invariant_frame(1.0, 0.0, 0.0, 0.0, 1.0), 0.0);
}

TEST(Foltinek, FrameVariantAgreesWithJ) {
  const double k = 0.7, kp = -0.2, tau = 0.45, lambda = 1.3, cn = 0.9;
  EXPECT_NEAR(foltinek_invariant(k, kp, lambda, cn, angular_momentum_j(k, tau)),
              foltinek_invariant_frame(k, kp, tau, lambda, cn), 1e-15);
}

TEST(AngularMomentumJ, Oracles) {
  EXPECT_EQ(angular_momentum_j(1.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(angular_momentum_j(0.5, 0.5), -0.5);
}

TEST(Foltinek, ZeroLambdaIdentificationOnFreeSolution) {
  const CurveTrace t = integrate_elastica(scenario::generic_jet());
  const ConservedSet cs = conserved_momenta(t.front());
  const double lp = dot(cs.l, cs.p);
  for (std::size_t i = 0; i < t.size(); i += 20) {
    const FrenetFrame f = frenet_frame(t[i]);
    const double kd = dot(t[i].xdddot, f.N());
    EXPECT_NEAR(foltinek_invariant(f.kappa(), kd, 0.0, norm(cs.p), lp), 0.0, 1e-8);
    EXPECT_NEAR(angular_momentum_j(f.kappa(), f.tau()), lp, 1e-8);
  }
}

TEST(ClosedFrames, InvariantsAlongConstrainedSolution) {
  const FrenetFrame f0 = FrenetFrame::standard(1.0, 0.2);
  for (double lambda : {0.0, 1.0}) {
    const auto run = integrate_closed_frames(Vec3{}, f0, 0.3, lambda);
    const Vec3 c0 = momentum_of(run.front().frame, run.front().kappa_dot, lambda);
    const double F0 = foltinek_invariant_frame(1.0, 0.3, 0.2, lambda, norm(c0));
    EXPECT_NEAR(F0, 0.0, 1e-15);
    for (std::size_t i = 0; i < run.size(); i += 20) {
      const ClosedSample& s = run[i];
      const double k = s.frame.kappa();
      EXPECT_NEAR(foltinek_invariant_frame(k, s.kappa_dot, s.frame.tau(), lambda, norm(c0)), F0,
                  1e-8);
      expect_vec(closed_el_residual(s.frame, s.kappa_dot, lambda, c0), Vec3{}, 1e-8);
      EXPECT_NEAR(k * k * s.frame.tau(), 0.2, 1e-10);
    }
  }
}

TEST(ClosedScalar, ShiftedCurvatureEquation) {
  // 2 kappa'' + kappa^3 - 2 kappa tau^2 = lambda kappa
  const double k = 0.8, c = 0.3, lambda = 1.7, tau = c / (k * k);
  EXPECT_NEAR(2.0 * closed_kappa_ddot(k, c, lambda) + k * k * k - 2.0 * k * tau * tau,
              lambda * k, 1e-15);
}

TEST(ClosedScalar, MatchesFrameIntegration) {
  ode::RunOptions opt;
  opt.length = 5.0;
  const auto run = integrate_closed_frames(Vec3{}, FrenetFrame::standard(1.0, 0.2), 0.3, 1.0, opt);
  const CurvatureTrace k = integrate_closed_scalar(1.0, 0.3, 0.2, 1.0, opt);
  ASSERT_EQ(k.size(), run.size());
  for (std::size_t i = 0; i < k.size(); i += 50) EXPECT_NEAR(k.kappa[i], run[i].frame.kappa(), 1e-9);
}

TEST(ClosedFrames, ZeroLambdaReproducesFreeElastica) {
  ode::RunOptions opt;
  opt.length = 3.0;
  const JetState g = scenario::generic_jet();
  const auto run = integrate_closed_frames(g.x, frenet_frame(g), 0.3, 0.0, opt);
  const CurveTrace closed = closed_curve_trace(run, opt.step);
  const CurveTrace free = integrate_elastica(g, opt);
  ASSERT_EQ(closed.size(), free.size());
  for (std::size_t i = 0; i < free.size(); i += 30) {
    expect_vec(closed[i].x, free[i].x, 1e-8);
    expect_vec(closed[i].xdddot, free[i].xdddot, 1e-8);
  }
}
