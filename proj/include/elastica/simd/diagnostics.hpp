#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "elastica/types.hpp"

namespace elastica::simd {

/// Structure-of-arrays copy of a curve trace: one contiguous lane per component.
struct JetColumns {
  std::array<std::vector<double>, 3> x, xd, xdd, xddd;

  std::size_t size() const noexcept { return x[0].size(); }
  static JetColumns from_trace(const CurveTrace& trace);
};

/// Per-sample quantities that the invariant report reduces over.
struct SampleDiagnostics {
  std::vector<double> speed_defect;  // |xdot| - 1
  std::vector<double> tangency;      // <xdot, xddot>
  std::vector<double> acceleration;  // <xdot, xdddot> + |xddot|^2
  std::array<std::vector<double>, 3> p;  // -2 xdddot - 3 |xddot|^2 xdot
  std::array<std::vector<double>, 3> l;  // x x p + 2 xdot x xddot
  std::vector<double> kappa_sq;      // |xddot|^2
  std::vector<double> kappa_rate;    // <xddot, xdddot> = kappa kappa'
  std::vector<double> twist;         // <xdot x xddot, xdddot> = kappa^2 tau
  std::vector<double> xdot_p;        // <xdot, p> + |xddot|^2

  void resize(std::size_t n);
};

enum class Backend { scalar, avx2 };

/// Reference implementation, one sample at a time.
void diagnose_scalar(const JetColumns& in, SampleDiagnostics& out);

/// Four samples per iteration with AVX2; no fused multiply-add so results
/// match the scalar kernel. Only call when avx2_available() is true.
void diagnose_avx2(const JetColumns& in, SampleDiagnostics& out);

bool avx2_available() noexcept;

/// Best backend on this CPU.
Backend active_backend() noexcept;

/// Runs the active backend.
void diagnose(const JetColumns& in, SampleDiagnostics& out);

}  // namespace elastica::simd
