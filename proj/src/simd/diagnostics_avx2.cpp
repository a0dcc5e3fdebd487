#include "elastica/simd/diagnostics.hpp"

#include <algorithm>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#endif

namespace elastica::simd {

#if defined(__x86_64__) || defined(__i386__)

namespace {

using V = __m256d;

__attribute__((target("avx2"))) inline V load(const std::vector<double>& v, std::size_t i) {
  return _mm256_loadu_pd(v.data() + i);
}
__attribute__((target("avx2"))) inline void store(std::vector<double>& v, std::size_t i, V x) {
  _mm256_storeu_pd(v.data() + i, x);
}
__attribute__((target("avx2"))) inline V add(V a, V b) { return _mm256_add_pd(a, b); }
__attribute__((target("avx2"))) inline V sub(V a, V b) { return _mm256_sub_pd(a, b); }
__attribute__((target("avx2"))) inline V mul(V a, V b) { return _mm256_mul_pd(a, b); }
__attribute__((target("avx2"))) inline V dot3(V a0, V a1, V a2, V b0, V b1, V b2) {
  return add(add(mul(a0, b0), mul(a1, b1)), mul(a2, b2));
}

}  // namespace

__attribute__((target("avx2"))) void diagnose_avx2(const JetColumns& in, SampleDiagnostics& out) {
  const std::size_t n = in.size();
  out.resize(n);
  const V one = _mm256_set1_pd(1.0), two = _mm256_set1_pd(2.0), three = _mm256_set1_pd(3.0);
  const V minus_two = _mm256_set1_pd(-2.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const V x0 = load(in.x[0], i), x1 = load(in.x[1], i), x2 = load(in.x[2], i);
    const V v0 = load(in.xd[0], i), v1 = load(in.xd[1], i), v2 = load(in.xd[2], i);
    const V a0 = load(in.xdd[0], i), a1 = load(in.xdd[1], i), a2 = load(in.xdd[2], i);
    const V j0 = load(in.xddd[0], i), j1 = load(in.xddd[1], i), j2 = load(in.xddd[2], i);

    const V vv = dot3(v0, v1, v2, v0, v1, v2);
    const V va = dot3(v0, v1, v2, a0, a1, a2);
    const V vj = dot3(v0, v1, v2, j0, j1, j2);
    const V aa = dot3(a0, a1, a2, a0, a1, a2);
    const V aj = dot3(a0, a1, a2, j0, j1, j2);

    const V m = mul(three, aa);
    const V p0 = sub(mul(minus_two, j0), mul(m, v0));
    const V p1 = sub(mul(minus_two, j1), mul(m, v1));
    const V p2 = sub(mul(minus_two, j2), mul(m, v2));

    const V w0 = sub(mul(v1, a2), mul(v2, a1));
    const V w1 = sub(mul(v2, a0), mul(v0, a2));
    const V w2 = sub(mul(v0, a1), mul(v1, a0));

    store(out.speed_defect, i, sub(_mm256_sqrt_pd(vv), one));
    store(out.tangency, i, va);
    store(out.acceleration, i, add(vj, aa));
    store(out.p[0], i, p0);
    store(out.p[1], i, p1);
    store(out.p[2], i, p2);
    store(out.l[0], i, add(sub(mul(x1, p2), mul(x2, p1)), mul(two, w0)));
    store(out.l[1], i, add(sub(mul(x2, p0), mul(x0, p2)), mul(two, w1)));
    store(out.l[2], i, add(sub(mul(x0, p1), mul(x1, p0)), mul(two, w2)));
    store(out.kappa_sq, i, aa);
    store(out.kappa_rate, i, aj);
    store(out.twist, i, dot3(w0, w1, w2, j0, j1, j2));
    store(out.xdot_p, i, add(dot3(v0, v1, v2, p0, p1, p2), aa));
  }
  if (i < n) {
    // Tail: run the reference kernel on the remaining samples.
    JetColumns tail;
    for (std::size_t k = 0; k < 3; ++k) {
      tail.x[k].assign(in.x[k].begin() + i, in.x[k].end());
      tail.xd[k].assign(in.xd[k].begin() + i, in.xd[k].end());
      tail.xdd[k].assign(in.xdd[k].begin() + i, in.xdd[k].end());
      tail.xddd[k].assign(in.xddd[k].begin() + i, in.xddd[k].end());
    }
    SampleDiagnostics rest;
    diagnose_scalar(tail, rest);
    auto copy = [&](std::vector<double>& dst, const std::vector<double>& src) {
      std::copy(src.begin(), src.end(), dst.begin() + i);
    };
    copy(out.speed_defect, rest.speed_defect);
    copy(out.tangency, rest.tangency);
    copy(out.acceleration, rest.acceleration);
    copy(out.kappa_sq, rest.kappa_sq);
    copy(out.kappa_rate, rest.kappa_rate);
    copy(out.twist, rest.twist);
    copy(out.xdot_p, rest.xdot_p);
    for (std::size_t k = 0; k < 3; ++k) {
      copy(out.p[k], rest.p[k]);
      copy(out.l[k], rest.l[k]);
    }
  }
}

#else

void diagnose_avx2(const JetColumns& in, SampleDiagnostics& out) { diagnose_scalar(in, out); }

#endif

}  // namespace elastica::simd
