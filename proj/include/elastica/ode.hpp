#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "elastica/errors.hpp"

namespace elastica::ode {

/// Flat real-vector state of fixed dimension.
template <std::size_t N>
using State = std::array<double, N>;

template <std::size_t N>
State<N> axpy(double a, const State<N>& x, const State<N>& y) {
  State<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a * x[i] + y[i];
  return r;
}

/// Increment of one classical RK4 step of size h.
template <std::size_t N, typename Rhs>
State<N> rk4_increment(Rhs& rhs, const State<N>& y, double h) {
  const State<N> k1 = rhs(y);
  const State<N> k2 = rhs(axpy(0.5 * h, k1, y));
  const State<N> k3 = rhs(axpy(0.5 * h, k2, y));
  const State<N> k4 = rhs(axpy(h, k3, y));
  State<N> d;
  for (std::size_t i = 0; i < N; ++i) d[i] = (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return d;
}

/// One classical RK4 step of size h.
template <std::size_t N, typename Rhs>
State<N> rk4_step(Rhs& rhs, const State<N>& y, double h) {
  State<N> r = rk4_increment<N>(rhs, y, h);
  for (std::size_t i = 0; i < N; ++i) r[i] += y[i];
  return r;
}

/// Optional map applied to the state after every accepted step.
template <std::size_t N>
using Projector = std::function<State<N>(const State<N>&)>;

/// Classical fixed-step RK4. Returns count + 1 states at uniform spacing `step`,
/// starting with `initial`. An exception thrown by `rhs` (or `project`) is
/// rethrown as IntegrationError carrying the failing step index.
template <std::size_t N, typename Rhs>
std::vector<State<N>> integrate(Rhs&& rhs, const State<N>& initial, double step, std::size_t count,
                                const Projector<N>& project = {}) {
  if (!(step > 0.0) || !std::isfinite(step)) throw SizeError("integrate: step must be positive");
  if (count < 1) throw SizeError("integrate: count must be >= 1");
  std::vector<State<N>> out;
  out.reserve(count + 1);
  out.push_back(initial);
  // Compensated (Kahan) accumulation of the increments keeps the rounding
  // error of long runs at O(eps) instead of O(count * eps).
  State<N> carry{};
  for (std::size_t n = 0; n < count; ++n) {
    try {
      const State<N>& y = out.back();
      const State<N> d = rk4_increment<N>(rhs, y, step);
      State<N> next;
      for (std::size_t i = 0; i < N; ++i) {
        const double corrected = d[i] - carry[i];
        next[i] = y[i] + corrected;
        carry[i] = (next[i] - y[i]) - corrected;
      }
      if (project) {
        next = project(next);
        carry = State<N>{};
      }
      for (double v : next) {
        if (!std::isfinite(v)) throw DomainError("non-finite state");
      }
      out.push_back(next);
    } catch (const IntegrationError&) {
      throw;
    } catch (const std::exception& e) {
      throw IntegrationError(n, e.what());
    }
  }
  return out;
}

/// Error tolerances for the adaptive Dormand-Prince integrator.
struct AdaptiveOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  double min_step = 1e-12;
  std::size_t max_steps_per_interval = 100000;
};

/// Advances `y` from 0 to `span` with embedded RK5(4) (Dormand-Prince) steps,
/// adapting the internal step. `h_hint` carries the last successful internal
/// step size between calls.
template <std::size_t N, typename Rhs>
State<N> dopri_advance(Rhs& rhs, State<N> y, double span, double& h_hint,
                       const AdaptiveOptions& opt) {
  // Butcher tableau (Dormand & Prince 1980).
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  double done = 0.0;
  double h = std::min(h_hint > 0.0 ? h_hint : span, span);
  for (std::size_t it = 0; done < span; ++it) {
    if (it >= opt.max_steps_per_interval) throw DomainError("dopri: step budget exhausted");
    const bool last = done + h >= span;
    if (last) h = span - done;
    const State<N> k1 = rhs(y);
    State<N> tmp;
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    const State<N> k2 = rhs(tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    const State<N> k3 = rhs(tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    const State<N> k4 = rhs(tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    const State<N> k5 = rhs(tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    const State<N> k6 = rhs(tmp);
    State<N> y5;
    for (std::size_t i = 0; i < N; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    const State<N> k7 = rhs(y5);

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double ei =
          h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale = opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(ei) / scale);
    }
    if (err <= 1.0) {
      done = last ? span : done + h;
      y = y5;
      if (!last) h_hint = h;
    } else if (h < opt.min_step) {
      throw DomainError("dopri: step size underflow");
    }
    const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= factor;
  }
  return y;
}

/// Adaptive RK45 sampled on the same uniform output grid as `integrate`: the
/// internal step adapts but every grid point is hit exactly.
template <std::size_t N, typename Rhs>
std::vector<State<N>> integrate_adaptive(Rhs&& rhs, const State<N>& initial, double step,
                                         std::size_t count, const AdaptiveOptions& opt = {},
                                         const Projector<N>& project = {}) {
  if (!(step > 0.0) || !std::isfinite(step)) throw SizeError("integrate_adaptive: step must be positive");
  if (count < 1) throw SizeError("integrate_adaptive: count must be >= 1");
  std::vector<State<N>> out;
  out.reserve(count + 1);
  out.push_back(initial);
  double h_hint = step;
  for (std::size_t n = 0; n < count; ++n) {
    try {
      State<N> next = dopri_advance<N>(rhs, out.back(), step, h_hint, opt);
      if (project) next = project(next);
      out.push_back(next);
    } catch (const std::exception& e) {
      throw IntegrationError(n, e.what());
    }
  }
  return out;
}

enum class Method { rk4, rk45 };

/// Grid and integrator settings shared by every trajectory driver.
struct RunOptions {
  double step = 1e-3;
  double length = 10.0;
  Method method = Method::rk4;
  bool project = false;
  AdaptiveOptions adaptive{};
};

/// Number of steps of size `step` covering `length`. Throws SizeError unless
/// the ratio is a positive integer to within 1e-9 relative.
std::size_t step_count(double step, double length);

const char* method_name(Method m) noexcept;

/// Dispatches to `integrate` or `integrate_adaptive` on the grid of `opt`.
template <std::size_t N, typename Rhs>
std::vector<State<N>> run(Rhs&& rhs, const State<N>& initial, const RunOptions& opt,
                          const Projector<N>& project = {}) {
  const std::size_t count = step_count(opt.step, opt.length);
  if (opt.method == Method::rk45) {
    return integrate_adaptive<N>(rhs, initial, opt.step, count, opt.adaptive, project);
  }
  return integrate<N>(rhs, initial, opt.step, count, project);
}

/// Composite Simpson rule over uniformly spaced samples. With an even number of
/// samples the trailing interval is closed with the trapezoid rule.
double simpson(std::span<const double> samples, double step);

/// Running integral from the first sample to every sample, fourth order
/// throughout: Simpson on even prefixes, Simpson plus the 3/8 rule on odd ones,
/// and a quadratic-fit rule for the first interval.
std::vector<double> cumulative_simpson(std::span<const double> samples, double step);

}  // namespace elastica::ode
