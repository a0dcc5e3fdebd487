#include "elastica/reconstruct.hpp"

#include <array>
#include <cmath>
#include <span>

#include "elastica/frenet.hpp"
#include "elastica/lagrangian.hpp"
#include "elastica/scalar.hpp"

namespace elastica {

namespace {

constexpr double kParallelThreshold = 1e-10;

// Running integral that also accepts traces too short for Simpson.
std::vector<double> running_integral(const std::vector<double>& f, double h) {
  if (f.size() >= 3) return ode::cumulative_simpson(std::span<const double>(f), h);
  std::vector<double> out(f.size(), 0.0);
  if (f.size() == 2) out[1] = 0.5 * h * (f[0] + f[1]);
  return out;
}

std::array<std::vector<double>, 3> running_integral(const std::vector<Vec3>& f, double h) {
  std::array<std::vector<double>, 3> out;
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<double> comp(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) comp[i] = f[i][c];
    out[c] = running_integral(comp, h);
  }
  return out;
}

void require_samples(const CurvatureTrace& k) {
  if (k.kappa.empty() || k.kappa.size() != k.kappa_dot.size()) {
    throw SizeError("curvature trace is empty or ragged");
  }
}

}  // namespace

const char* branch_name(Branch b) noexcept {
  switch (b) {
    case Branch::generic: return "generic";
    case Branch::planar: return "planar";
    case Branch::degenerate_line: return "line";
  }
  return "?";
}

Branch classify_case(const ConservedSet& cs, double kappa0, double tau0, double tol) {
  const double scale = tol * std::max(1.0, norm_sq(cs.p));
  if (norm_sq(cs.p) <= scale || !(std::abs(kappa0) > kKappaMin)) return Branch::degenerate_line;
  const bool untwisted = std::abs(kappa0 * kappa0 * tau0) <= scale;
  const bool flat_momenta = std::abs(0.25 * dot(cs.l, cs.p)) <= scale;
  return untwisted && flat_momenta ? Branch::planar : Branch::generic;
}

FrameDE frame_DE(const JetState& j, const Vec3& p) {
  const Vec3 u = cross(j.xdot, p);
  if (!(norm_sq(u) > kParallelThreshold * norm_sq(p))) {
    throw BranchError("frame_DE: xdot is parallel to p; use the planar or line branch");
  }
  return {normalized(u), normalized(cross(u, p))};
}

double rotation_rate(double kappa, const ConservedSet& cs) {
  const double p2 = norm_sq(cs.p);
  const double gap = p2 - std::pow(kappa, 4);
  if (!(gap > kParallelThreshold * p2)) {
    throw BranchError("rotation_rate: |p|^2 - kappa^4 vanishes; xdot is parallel to p");
  }
  return -dot(cs.l, cs.p) * std::sqrt(p2) / (2.0 * gap);
}

std::vector<double> phase_phi(const CurvatureTrace& kappa, const ConservedSet& cs) {
  require_samples(kappa);
  std::vector<double> rate(kappa.size());
  for (std::size_t i = 0; i < rate.size(); ++i) rate[i] = rotation_rate(kappa.kappa[i], cs);
  return running_integral(rate, kappa.step);
}

FrameDE rotate_frame(const Vec3& D0, const Vec3& E0, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {c * D0 + s * E0, -s * D0 + c * E0};
}

CurveTrace reconstruct_curve(const CurvatureTrace& kappa, const ConservedSet& cs, const Vec3& x0,
                             const Vec3& D0, const Vec3& E0) {
  require_samples(kappa);
  const double p2 = norm_sq(cs.p);
  if (!(p2 > 0.0)) throw BranchError("reconstruct_curve: p = 0 is the straight-line branch");
  const double pn = std::sqrt(p2);
  const std::vector<double> phi = phase_phi(kappa, cs);

  const std::size_t n = kappa.size();
  std::vector<Vec3> v(n), a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = kappa.kappa[i], kd = kappa.kappa_dot[i];
    const double r = std::sqrt(p2 - std::pow(k, 4));
    const double omega = rotation_rate(k, cs);
    const FrameDE f = rotate_frame(D0, E0, phi[i]);
    v[i] = (-k * k / p2) * cs.p - (r / pn) * f.E;
    // d/ds of v: r' = -2 k^3 k'/r and E' = -omega D.
    a[i] = (-2.0 * k * kd / p2) * cs.p + (2.0 * k * k * k * kd / (r * pn)) * f.E +
           (r * omega / pn) * f.D;
  }
  const auto x = running_integral(v, kappa.step);

  std::vector<JetState> samples;
  samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = kappa.kappa[i];
    const Vec3 xi = x0 + Vec3(x[0][i], x[1][i], x[2][i]);
    const Vec3 third = -0.5 * (cs.p + 3.0 * k * k * v[i]);
    samples.emplace_back(kappa.s(i), xi, v[i], a[i], third);
  }
  return CurveTrace(kappa.step, std::move(samples), "arclength", "reconstruction");
}

CurveTrace reconstruct_planar(const CurvatureTrace& kappa, const ConservedSet& cs, const Vec3& x0,
                              const Vec3& B) {
  require_samples(kappa);
  const Vec3 q = cross(cs.p, B);
  const double p2 = norm_sq(cs.p);
  if (!(norm_sq(q) > kParallelThreshold * std::max(1.0, p2))) {
    throw BranchError("reconstruct_planar: p x B = 0 is the straight-line branch");
  }
  const std::size_t n = kappa.size();
  std::vector<double> k2(n);
  for (std::size_t i = 0; i < n; ++i) k2[i] = kappa.kappa[i] * kappa.kappa[i];
  const std::vector<double> along = running_integral(k2, kappa.step);

  std::vector<JetState> samples;
  samples.reserve(n);
  const double k0 = kappa.kappa.front();
  for (std::size_t i = 0; i < n; ++i) {
    const double k = kappa.kappa[i], kd = kappa.kappa_dot[i];
    const double kdd = scalar_rhs(k, kd, 0.0).kappa_ddot;
    const Vec3 x = x0 - (along[i] / p2) * cs.p + (2.0 * (k0 - k) / p2) * q;
    const Vec3 v = (-k * k * cs.p - 2.0 * kd * q) / p2;
    const Vec3 a = (-2.0 * k * kd * cs.p - 2.0 * kdd * q) / p2;
    const Vec3 third = -0.5 * (cs.p + 3.0 * k * k * v);
    samples.emplace_back(kappa.s(i), x, v, a, third);
  }
  return CurveTrace(kappa.step, std::move(samples), "arclength", "reconstruction");
}

CurveTrace reconstruct(const JetState& initial, const ode::RunOptions& opt) {
  const ConservedSet cs = conserved_momenta(initial);
  const double kappa0 = norm(perpendicular_part(initial.xddot, initial.xdot));
  const double tau0 = kappa0 > kKappaMin ? frenet_frame(initial).tau() : 0.0;
  switch (classify_case(cs, kappa0, tau0)) {
    case Branch::generic: {
      const double c = constants_from_momenta(cs).c;
      const double kappa_dot0 = dot(initial.xddot, initial.xdddot) / kappa0;
      const CurvatureTrace k = integrate_scalar(kappa0, kappa_dot0, c, opt, initial.t);
      const FrameDE de = frame_DE(initial, cs.p);
      return reconstruct_curve(k, cs, initial.x, de.D, de.E);
    }
    case Branch::planar: {
      const FrenetFrame f = frenet_frame(initial);
      const double kappa_dot0 = dot(initial.xddot, initial.xdddot) / kappa0;
      const CurvatureTrace k = integrate_scalar(kappa0, kappa_dot0, 0.0, opt, initial.t);
      return reconstruct_planar(k, cs, initial.x, f.B());
    }
    case Branch::degenerate_line: break;
  }
  if (norm_sq(cs.p) > 1e-10) {
    // kappa vanishes at s0 but p does not: an inflection of a planar elastica,
    // not a line. The binormal is undefined there.
    throw BranchError("reconstruct: initial point is an inflection (kappa = 0, p != 0)");
  }
  const std::size_t count = ode::step_count(opt.step, opt.length);
  const Vec3 T = normalized(initial.xdot);
  std::vector<JetState> samples;
  samples.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i) {
    const double s = static_cast<double>(i) * opt.step;
    samples.emplace_back(initial.t + s, initial.x + s * T, T, Vec3{}, Vec3{});
  }
  return CurveTrace(opt.step, std::move(samples), "arclength", "reconstruction");
}

}  // namespace elastica
