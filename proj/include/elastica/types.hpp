#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "elastica/errors.hpp"
#include "elastica/vec3.hpp"

namespace elastica {

/// Absolute tolerance for representation checks done at construction.
inline constexpr double kRepresentationTolerance = 1e-10;

/// Tolerance for the arclength gauge when it is a precondition of the dynamics.
/// Looser than the representation tolerance so that RK4 stage states (which sit
/// O(h^5) off the gauge) and long integrations are accepted.
inline constexpr double kGaugeTolerance = 1e-6;

/// Curvature below which the Frenet frame is treated as undefined.
inline constexpr double kKappaMin = 1e-8;

/// Residuals of the three arclength conditions
/// |xdot| = 1, <xdot, xddot> = 0, <xdot, xdddot> + |xddot|^2 = 0.
struct ArclengthResiduals {
  double speed = 0.0;
  double tangency = 0.0;
  double acceleration = 0.0;

  double max_abs() const {
    return std::max({std::abs(speed), std::abs(tangency), std::abs(acceleration)});
  }
};

/// A point (t, x, xdot, xddot, xdddot) of the third jet bundle.
struct JetState {
  double t = 0.0;
  Vec3 x;
  Vec3 xdot;
  Vec3 xddot;
  Vec3 xdddot;

  JetState() = default;
  JetState(double t_, const Vec3& x_, const Vec3& xdot_, const Vec3& xddot_, const Vec3& xdddot_)
      : t(t_), x(x_), xdot(xdot_), xddot(xddot_), xdddot(xdddot_) {
    if (!std::isfinite(t)) throw DegenerateInput("JetState: non-finite parameter");
  }

  /// Builds a jet and verifies the arclength conditions to kRepresentationTolerance.
  static JetState arclength(double t, const Vec3& x, const Vec3& xdot, const Vec3& xddot,
                            const Vec3& xdddot);

  ArclengthResiduals arclength_residuals() const {
    return {norm(xdot) - 1.0, dot(xdot, xddot), dot(xdot, xdddot) + norm_sq(xddot)};
  }
  bool is_arclength(double tol = kRepresentationTolerance) const {
    return arclength_residuals().max_abs() <= tol;
  }
};

/// Throws GaugeError unless `j` satisfies the arclength conditions to `tol`.
void require_arclength(const JetState& j, double tol, const char* where);

/// A point (t, x, xdot, p_t, p_x, p_xdot) of T*J^1 with xdot != 0.
struct PhaseState {
  double t = 0.0;
  Vec3 x;
  Vec3 xdot;
  Vec3 p_x;
  Vec3 p_xdot;
  double p_t = 0.0;

  PhaseState() = default;
  PhaseState(double t_, const Vec3& x_, const Vec3& xdot_, const Vec3& p_x_, const Vec3& p_xdot_,
             double p_t_)
      : t(t_), x(x_), xdot(xdot_), p_x(p_x_), p_xdot(p_xdot_), p_t(p_t_) {
    if (!std::isfinite(t) || !std::isfinite(p_t)) {
      throw DegenerateInput("PhaseState: non-finite scalar");
    }
    if (norm(xdot) == 0.0) throw DomainError("PhaseState: xdot = 0 is outside T*J0^1");
  }
};

/// Orthonormal moving frame with curvature and torsion.
class FrenetFrame {
 public:
  /// Validates orthonormality, B = T x N (to 1e-10) and kappa >= 0.
  FrenetFrame(const Vec3& T, const Vec3& N, const Vec3& B, double kappa, double tau);

  /// The frame T = e1, N = e2, B = e3.
  static FrenetFrame standard(double kappa, double tau) { return {kE1, kE2, kE3, kappa, tau}; }

  const Vec3& T() const noexcept { return T_; }
  const Vec3& N() const noexcept { return N_; }
  const Vec3& B() const noexcept { return B_; }
  double kappa() const noexcept { return kappa_; }
  double tau() const noexcept { return tau_; }

 private:
  Vec3 T_, N_, B_;
  double kappa_;
  double tau_;
};

/// Conserved quantities of a free elastica: linear momentum p, angular momentum
/// l, energy H and the torsion constant c = kappa^2 tau.
struct ConservedSet {
  Vec3 p;
  Vec3 l;
  double H = 0.0;
  double c = 0.0;
};

/// Uniformly sampled trajectory. Samples are strictly increasing in their
/// parameter with spacing `step` (checked to 1e-12 on construction).
template <typename State>
class Trace {
 public:
  Trace() = default;
  Trace(double step, std::vector<State> samples, std::string gauge = "arclength",
        std::string integrator = "rk4")
      : step_(step), samples_(std::move(samples)), gauge_(std::move(gauge)),
        integrator_(std::move(integrator)) {
    validate();
  }

  double step() const noexcept { return step_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  const State& operator[](std::size_t i) const { return samples_[i]; }
  const State& front() const { return samples_.front(); }
  const State& back() const { return samples_.back(); }
  const std::vector<State>& samples() const noexcept { return samples_; }
  auto begin() const { return samples_.begin(); }
  auto end() const { return samples_.end(); }
  const std::string& gauge() const noexcept { return gauge_; }
  const std::string& integrator() const noexcept { return integrator_; }

 private:
  void validate() const {
    if (!(step_ > 0.0) || !std::isfinite(step_)) throw SizeError("Trace: step must be positive");
    for (std::size_t i = 1; i < samples_.size(); ++i) {
      const double ds = samples_[i].t - samples_[i - 1].t;
      if (std::abs(ds - step_) > 1e-12 * std::max(1.0, std::abs(samples_[i].t))) {
        throw SizeError("Trace: non-uniform sample spacing at index " + std::to_string(i));
      }
    }
  }

  double step_ = 1.0;
  std::vector<State> samples_;
  std::string gauge_ = "arclength";
  std::string integrator_ = "rk4";
};

using CurveTrace = Trace<JetState>;
using PhaseTrace = Trace<PhaseState>;

/// Uniformly sampled curvature, its derivative and the torsion constant c.
struct CurvatureTrace {
  double s0 = 0.0;
  double step = 1.0;
  double c = 0.0;
  std::vector<double> kappa;
  std::vector<double> kappa_dot;

  std::size_t size() const noexcept { return kappa.size(); }
  double s(std::size_t i) const noexcept { return s0 + static_cast<double>(i) * step; }
};

}  // namespace elastica
