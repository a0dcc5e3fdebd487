#include "elastica/ode.hpp"

namespace elastica::ode {

double simpson(std::span<const double> f, double step) {
  if (f.size() < 3) throw SizeError("simpson: need at least 3 samples");
  const std::size_t intervals = f.size() - 1;
  const std::size_t even = intervals - intervals % 2;
  double odd_sum = 0.0, even_sum = 0.0;
  for (std::size_t i = 1; i < even; i += 2) odd_sum += f[i];
  for (std::size_t i = 2; i < even; i += 2) even_sum += f[i];
  double total = step / 3.0 * (f[0] + 4.0 * odd_sum + 2.0 * even_sum + f[even]);
  if (even != intervals) total += 0.5 * step * (f[even] + f[even + 1]);
  return total;
}

std::vector<double> cumulative_simpson(std::span<const double> f, double step) {
  if (f.size() < 3) throw SizeError("cumulative_simpson: need at least 3 samples");
  std::vector<double> out(f.size(), 0.0);
  out[1] = step / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
  for (std::size_t i = 2; i < f.size(); i += 2) {
    out[i] = out[i - 2] + step / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
  }
  for (std::size_t i = 3; i < f.size(); i += 2) {
    out[i] = out[i - 3] + 3.0 * step / 8.0 * (f[i - 3] + 3.0 * f[i - 2] + 3.0 * f[i - 1] + f[i]);
  }
  return out;
}

std::size_t step_count(double step, double length) {
  if (!(step > 0.0) || !std::isfinite(step)) throw SizeError("step must be positive");
  if (!(length > 0.0) || !std::isfinite(length)) throw SizeError("length must be positive");
  const double ratio = length / step;
  const double n = std::round(ratio);
  if (n < 1.0 || std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio)) {
    throw SizeError("length must be a positive integer multiple of step");
  }
  return static_cast<std::size_t>(n);
}

const char* method_name(Method m) noexcept { return m == Method::rk45 ? "rk45" : "rk4"; }

}  // namespace elastica::ode
