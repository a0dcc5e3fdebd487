#include "elastica/simd/diagnostics.hpp"

#include <cmath>

namespace elastica::simd {

JetColumns JetColumns::from_trace(const CurveTrace& trace) {
  JetColumns c;
  for (std::size_t k = 0; k < 3; ++k) {
    c.x[k].resize(trace.size());
    c.xd[k].resize(trace.size());
    c.xdd[k].resize(trace.size());
    c.xddd[k].resize(trace.size());
  }
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const JetState& j = trace[i];
    for (std::size_t k = 0; k < 3; ++k) {
      c.x[k][i] = j.x[k];
      c.xd[k][i] = j.xdot[k];
      c.xdd[k][i] = j.xddot[k];
      c.xddd[k][i] = j.xdddot[k];
    }
  }
  return c;
}

void SampleDiagnostics::resize(std::size_t n) {
  for (auto* v : {&speed_defect, &tangency, &acceleration, &kappa_sq, &kappa_rate, &twist, &xdot_p}) {
    v->resize(n);
  }
  for (std::size_t k = 0; k < 3; ++k) {
    p[k].resize(n);
    l[k].resize(n);
  }
}

// The operation order here is mirrored lane for lane by the AVX2 kernel.
void diagnose_scalar(const JetColumns& in, SampleDiagnostics& out) {
  const std::size_t n = in.size();
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x0 = in.x[0][i], x1 = in.x[1][i], x2 = in.x[2][i];
    const double v0 = in.xd[0][i], v1 = in.xd[1][i], v2 = in.xd[2][i];
    const double a0 = in.xdd[0][i], a1 = in.xdd[1][i], a2 = in.xdd[2][i];
    const double j0 = in.xddd[0][i], j1 = in.xddd[1][i], j2 = in.xddd[2][i];

    const double vv = (v0 * v0 + v1 * v1) + v2 * v2;
    const double va = (v0 * a0 + v1 * a1) + v2 * a2;
    const double vj = (v0 * j0 + v1 * j1) + v2 * j2;
    const double aa = (a0 * a0 + a1 * a1) + a2 * a2;
    const double aj = (a0 * j0 + a1 * j1) + a2 * j2;

    const double m = 3.0 * aa;
    const double p0 = -2.0 * j0 - m * v0;
    const double p1 = -2.0 * j1 - m * v1;
    const double p2 = -2.0 * j2 - m * v2;

    const double w0 = v1 * a2 - v2 * a1;
    const double w1 = v2 * a0 - v0 * a2;
    const double w2 = v0 * a1 - v1 * a0;

    out.speed_defect[i] = std::sqrt(vv) - 1.0;
    out.tangency[i] = va;
    out.acceleration[i] = vj + aa;
    out.p[0][i] = p0;
    out.p[1][i] = p1;
    out.p[2][i] = p2;
    out.l[0][i] = (x1 * p2 - x2 * p1) + 2.0 * w0;
    out.l[1][i] = (x2 * p0 - x0 * p2) + 2.0 * w1;
    out.l[2][i] = (x0 * p1 - x1 * p0) + 2.0 * w2;
    out.kappa_sq[i] = aa;
    out.kappa_rate[i] = aj;
    out.twist[i] = (w0 * j0 + w1 * j1) + w2 * j2;
    out.xdot_p[i] = ((v0 * p0 + v1 * p1) + v2 * p2) + aa;
  }
}

bool avx2_available() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() noexcept { return avx2_available() ? Backend::avx2 : Backend::scalar; }

void diagnose(const JetColumns& in, SampleDiagnostics& out) {
  if (active_backend() == Backend::avx2) {
    diagnose_avx2(in, out);
  } else {
    diagnose_scalar(in, out);
  }
}

}  // namespace elastica::simd
