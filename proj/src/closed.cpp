#include "elastica/closed.hpp"

#include <cmath>
#include <string>

#include "elastica/frenet.hpp"

namespace elastica {

namespace {

void require_curved(double kappa, const char* where) {
  if (!(std::abs(kappa) > kKappaMin)) {
    throw SingularTorsion(std::string(where) + ": kappa at or below the frame threshold");
  }
}

}  // namespace

double reduced_lagrangian(const Vec3& q, const Vec3& qdot, double lambda, const Vec3& c) {
  const double r = norm(q);
  if (!(r > 0.0)) throw DomainError("reduced_lagrangian: q = 0");
  return norm_sq(cross(q, qdot)) / std::pow(r, 5) + lambda * r - dot(c, q);
}

Vec3 closed_el_residual(const FrenetFrame& f, double kappa_dot, double lambda, const Vec3& c) {
  const double k = f.kappa();
  return (lambda - k * k) * f.T() - (2.0 * kappa_dot) * f.N() - (2.0 * k * f.tau()) * f.B() - c;
}

double foltinek_invariant(double kappa, double kappa_prime, double lambda, double c_norm,
                          double j) {
  require_curved(kappa, "foltinek_invariant");
  const double shift = lambda - kappa * kappa;
  return 4.0 * kappa_prime * kappa_prime + shift * shift + j * j / (4.0 * kappa * kappa) -
         c_norm * c_norm;
}

double foltinek_invariant_frame(double kappa, double kappa_prime, double tau, double lambda,
                                double c_norm) {
  require_curved(kappa, "foltinek_invariant_frame");
  const double shift = lambda - kappa * kappa;
  return 4.0 * kappa_prime * kappa_prime + shift * shift + 4.0 * kappa * kappa * tau * tau -
         c_norm * c_norm;
}

double angular_momentum_j(double kappa, double tau) { return -4.0 * kappa * kappa * tau; }

double closed_kappa_ddot(double kappa, double c, double lambda) {
  if (c != 0.0) require_curved(kappa, "closed_kappa_ddot");
  const double k3 = kappa * kappa * kappa;
  return 0.5 * (lambda * kappa - k3) + (c == 0.0 ? 0.0 : c * c / k3);
}

CurvatureTrace integrate_closed_scalar(double kappa0, double kappa_dot0, double c, double lambda,
                                       const ode::RunOptions& opt) {
  auto rhs = [c, lambda](const ode::State<2>& y) {
    return ode::State<2>{y[1], closed_kappa_ddot(y[0], c, lambda)};
  };
  const auto states = ode::run<2>(rhs, ode::State<2>{kappa0, kappa_dot0}, opt);
  CurvatureTrace out;
  out.step = opt.step;
  out.c = c;
  for (const auto& y : states) {
    out.kappa.push_back(y[0]);
    out.kappa_dot.push_back(y[1]);
  }
  return out;
}

std::vector<ClosedSample> integrate_closed_frames(const Vec3& x0, const FrenetFrame& f0,
                                                  double kappa_dot0, double lambda,
                                                  const ode::RunOptions& opt) {
  const double c = f0.kappa() * f0.kappa() * f0.tau();
  using S = ode::State<14>;
  auto put = [](S& y, std::size_t at, const Vec3& v) {
    for (std::size_t i = 0; i < 3; ++i) y[at + i] = v[i];
  };
  auto get = [](const S& y, std::size_t at) { return Vec3(y[at], y[at + 1], y[at + 2]); };

  auto rhs = [&](const S& y) {
    const double k = y[12];
    require_curved(k, "integrate_closed_frames");
    const double tau = c / (k * k);
    const Vec3 T = get(y, 3), N = get(y, 6), B = get(y, 9);
    S d;
    put(d, 0, T);
    put(d, 3, k * N);
    put(d, 6, -k * T + tau * B);
    put(d, 9, -tau * N);
    d[12] = y[13];
    d[13] = closed_kappa_ddot(k, c, lambda);
    return d;
  };
  S y0;
  put(y0, 0, x0);
  put(y0, 3, f0.T());
  put(y0, 6, f0.N());
  put(y0, 9, f0.B());
  y0[12] = f0.kappa();
  y0[13] = kappa_dot0;

  const auto states = ode::run<14>(rhs, y0, opt);
  std::vector<ClosedSample> out;
  out.reserve(states.size());
  for (std::size_t n = 0; n < states.size(); ++n) {
    const S& y = states[n];
    const double k = y[12];
    out.push_back({static_cast<double>(n) * opt.step, get(y, 0),
                   FrenetFrame(get(y, 3), get(y, 6), get(y, 9), k, c / (k * k)), y[13]});
  }
  return out;
}

CurveTrace closed_curve_trace(const std::vector<ClosedSample>& run, double step) {
  std::vector<JetState> jets;
  jets.reserve(run.size());
  for (const ClosedSample& s : run) jets.push_back(jet_from_frame(s.x, s.frame, s.kappa_dot, s.s));
  return CurveTrace(step, std::move(jets), "arclength", "closed");
}

}  // namespace elastica
