#include <gtest/gtest.h>

#include <cmath>

#include "elastica/frenet.hpp"
#include "elastica/lagrangian.hpp"
#include "elastica/reconstruct.hpp"
#include "elastica/scalar.hpp"
#include "scenarios.hpp"

using namespace elastica;

namespace {

void expect_vec(const Vec3& a, const Vec3& b, double tol) {
  EXPECT_LE(norm(a - b), tol) << a << " vs " << b;
}

ode::RunOptions five() {
  ode::RunOptions opt;
  opt.length = 5.0;
  return opt;
}

double sup_dx(const CurveTrace& a, const CurveTrace& b) {
  EXPECT_EQ(a.size(), b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, norm(a[i].x - b[i].x));
  return m;
}

}  // namespace

TEST(ClassifyCase, Oracles) {
  EXPECT_EQ(classify_case({Vec3(-1, -2, 0), Vec3(1, 0, 0), 0, 0}, 1.0, 0.2), Branch::generic);
  EXPECT_EQ(classify_case({Vec3(-1, 0, 0), Vec3(0, 0, 2), 0, 0}, 1.0, 0.0), Branch::planar);
  EXPECT_EQ(classify_case({}, 0.0, 0.0), Branch::degenerate_line);
  EXPECT_STREQ(branch_name(Branch::planar), "planar");
}

TEST(ClassifyCase, FromInitialJets) {
  const auto cls = [](const JetState& j) {
    const FrenetFrame f = frenet_frame(j);
    return classify_case(conserved_momenta(j), f.kappa(), f.tau());
  };
  EXPECT_EQ(cls(scenario::generic_jet()), Branch::generic);
  EXPECT_EQ(cls(scenario::planar_jet()), Branch::planar);
}

TEST(FrameDE, HandEvaluation) {
  const JetState j = jet_from_frame(Vec3{}, FrenetFrame::standard(1.0, 0.0), 1.0);
  const Vec3 p = conserved_momenta(j).p;
  expect_vec(p, Vec3(-1, -2, 0), 1e-15);
  const FrameDE de = frame_DE(j, p);
  expect_vec(de.D, Vec3(0, 0, -1), 1e-15);
}

TEST(FrameDE, ParallelIsBranchError) {
  const JetState j = jet_from_frame(Vec3{}, FrenetFrame::standard(1.0, 0.0), 0.0);
  EXPECT_THROW(frame_DE(j, conserved_momenta(j).p), BranchError);
}

TEST(FrameDE, OrthonormalAndLengthIdentityAlongSolution) {
  const CurveTrace t = integrate_elastica(scenario::generic_jet(), five());
  const Vec3 p = conserved_momenta(t.front()).p;
  for (std::size_t i = 0; i < t.size(); i += 25) {
    const FrameDE de = frame_DE(t[i], p);
    EXPECT_NEAR(norm(de.D), 1.0, 1e-10);
    EXPECT_NEAR(norm(de.E), 1.0, 1e-10);
    EXPECT_NEAR(dot(de.D, de.E), 0.0, 1e-10);
    EXPECT_NEAR(dot(de.D, p), 0.0, 1e-10);
    EXPECT_NEAR(dot(de.E, p), 0.0, 1e-10);
    const double k2 = norm_sq(t[i].xddot);
    EXPECT_NEAR(norm_sq(cross(t[i].xdot, p)), norm_sq(p) - k2 * k2, 1e-8);
  }
}

TEST(PhasePhi, PlanarMomentaGiveZero) {
  const ConservedSet cs{Vec3(-1, -2, 0), Vec3(0, 0, 3), 0, 0};
  const CurvatureTrace k = integrate_scalar(1.0, 1.0, 0.0, five());
  for (double phi : phase_phi(k, cs)) EXPECT_EQ(phi, 0.0);
}

TEST(PhasePhi, RotatedFrameMatchesIntegratedSolution) {
  const JetState j0 = scenario::generic_jet();
  const CurveTrace full = integrate_elastica(j0, five());
  const ConservedSet cs = conserved_momenta(j0);
  const CurvatureTrace k = integrate_scalar(1.0, 0.3, constants_from_momenta(cs).c, five());
  const std::vector<double> phi = phase_phi(k, cs);
  EXPECT_EQ(phi.front(), 0.0);
  const FrameDE de0 = frame_DE(j0, cs.p);
  double err = 0.0;
  for (std::size_t i = 0; i < full.size(); ++i) {
    const FrameDE rot = rotate_frame(de0.D, de0.E, phi[i]);
    const FrameDE ref = frame_DE(full[i], cs.p);
    err = std::max({err, norm(rot.D - ref.D), norm(rot.E - ref.E)});
  }
  EXPECT_LT(err, 1e-4);
}

TEST(ReconstructCurve, MatchesDirectIntegration) {
  const JetState j0 = scenario::generic_jet();
  const CurveTrace full = integrate_elastica(j0, five());
  const CurveTrace rec = reconstruct(j0, five());
  EXPECT_EQ(rec.integrator(), "reconstruction");
  EXPECT_LT(sup_dx(full, rec), 1e-4);
  for (std::size_t i = 0; i < rec.size(); i += 50) {
    expect_vec(rec[i].xdot, full[i].xdot, 1e-6);
    expect_vec(rec[i].xddot, full[i].xddot, 1e-6);
  }
}

TEST(ReconstructCurve, VelocityAlongP) {
  const JetState j0 = scenario::generic_jet();
  const ConservedSet cs = conserved_momenta(j0);
  const CurveTrace rec = reconstruct(j0, five());
  for (const JetState& j : rec) {
    EXPECT_NEAR(dot(j.xdot, cs.p) + norm_sq(j.xddot), 0.0, 1e-8);
    EXPECT_NEAR(norm(j.xdot), 1.0, 1e-10);
  }
}

TEST(ReconstructCurve, SingleSampleStaysAtStart) {
  const JetState j0 = scenario::generic_jet();
  const ConservedSet cs = conserved_momenta(j0);
  CurvatureTrace k;
  k.step = 1e-3;
  k.c = 0.2;
  k.kappa = {1.0};
  k.kappa_dot = {0.3};
  const FrameDE de = frame_DE(j0, cs.p);
  const CurveTrace rec = reconstruct_curve(k, cs, Vec3(1, 2, 3), de.D, de.E);
  ASSERT_EQ(rec.size(), 1u);
  expect_vec(rec[0].x, Vec3(1, 2, 3), 0.0);
  expect_vec(rec[0].xdot, j0.xdot, 1e-14);
}

TEST(ReconstructPlanar, MatchesDirectIntegration) {
  const JetState j0 = scenario::planar_jet();
  const CurveTrace full = integrate_elastica(j0);
  const CurveTrace rec = reconstruct(j0);
  EXPECT_LT(sup_dx(full, rec), 1e-6);
  const Vec3 B0 = frenet_frame(j0).B();
  // kappa changes sign on this run, so test the binormal line rather than the unsigned frame
  for (std::size_t i = 0; i < full.size(); i += 10) {
    EXPECT_LE(norm(cross(cross(full[i].xdot, full[i].xddot), B0)), 1e-8);
  }
}

TEST(ReconstructPlanar, LineMomentumRejected) {
  CurvatureTrace k;
  k.kappa = {1.0, 1.0, 1.0};
  k.kappa_dot = {0.0, 0.0, 0.0};
  EXPECT_THROW(reconstruct_planar(k, ConservedSet{}, Vec3{}, kE3), BranchError);
}

TEST(Reconstruct, LineBranch) {
  ode::RunOptions opt;
  opt.step = 0.5;
  opt.length = 2.0;
  const JetState j(1.0, Vec3(1, 1, 1), normalized(Vec3(1, 2, 2)), Vec3{}, Vec3{});
  const CurveTrace t = reconstruct(j, opt);
  ASSERT_EQ(t.size(), 5u);
  expect_vec(t.back().x, Vec3(1, 1, 1) + 2.0 * j.xdot, 1e-15);
  EXPECT_DOUBLE_EQ(t.back().t, 3.0);
}

TEST(Reconstruct, InflectionIsBranchError) {
  // kappa = 0 with kappa_dot != 0: p = -2 kappa_dot N is nonzero
  const JetState j(0.0, Vec3{}, kE1, Vec3{}, 0.5 * kE2);
  EXPECT_THROW(reconstruct(j), BranchError);
}
