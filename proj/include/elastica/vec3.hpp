#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <utility>

#include "elastica/errors.hpp"

namespace elastica {

/// Three real components. Non-finite values are rejected on construction, so
/// every Vec3 in flight is finite.
class Vec3 {
 public:
  constexpr Vec3() = default;
  Vec3(double x, double y, double z) : c_{x, y, z} {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
      throw DegenerateInput("Vec3: non-finite component");
    }
  }

  double x() const noexcept { return c_[0]; }
  double y() const noexcept { return c_[1]; }
  double z() const noexcept { return c_[2]; }
  double operator[](std::size_t i) const noexcept { return c_[i]; }
  const std::array<double, 3>& data() const noexcept { return c_; }

  Vec3& operator+=(const Vec3& o) { return *this = *this + o; }
  Vec3& operator-=(const Vec3& o) { return *this = *this - o; }
  Vec3& operator*=(double s) { return *this = *this * s; }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]};
  }
  friend Vec3 operator-(const Vec3& a) { return {-a.c_[0], -a.c_[1], -a.c_[2]}; }
  friend Vec3 operator*(double s, const Vec3& a) { return {s * a.c_[0], s * a.c_[1], s * a.c_[2]}; }
  friend Vec3 operator*(const Vec3& a, double s) { return s * a; }
  friend Vec3 operator/(const Vec3& a, double s) { return {a.c_[0] / s, a.c_[1] / s, a.c_[2] / s}; }
  friend bool operator==(const Vec3& a, const Vec3& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << '(' << v.c_[0] << ", " << v.c_[1] << ", " << v.c_[2] << ')';
  }

 private:
  std::array<double, 3> c_{0.0, 0.0, 0.0};
};

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm_sq(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm_sq(a)); }

/// Unit vector along `a`; throws DegenerateInput for the zero vector.
Vec3 normalized(const Vec3& a);

/// Components of `v` parallel and perpendicular to `direction`.
struct Split {
  Vec3 parallel;
  Vec3 perpendicular;
};

/// Splits `v` into <v,d>/|d|^2 d and the remainder. The remainder is computed
/// as v - parallel so that the two parts always sum back to `v`.
Split split_parallel(const Vec3& v, const Vec3& direction);

inline Vec3 perpendicular_part(const Vec3& v, const Vec3& direction) {
  return split_parallel(v, direction).perpendicular;
}

inline const Vec3 kE1{1.0, 0.0, 0.0};
inline const Vec3 kE2{0.0, 1.0, 0.0};
inline const Vec3 kE3{0.0, 0.0, 1.0};

/// 3x3 matrix stored row-major; used for the x-derivative of symmetry fields.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static Mat3 zero() { return {}; }
  static Mat3 identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }
  /// Matrix of v -> axis x v.
  static Mat3 cross_matrix(const Vec3& axis) {
    Mat3 r;
    r.m = {{{0.0, -axis[2], axis[1]}, {axis[2], 0.0, -axis[0]}, {-axis[1], axis[0], 0.0}}};
    return r;
  }

  Vec3 operator*(const Vec3& v) const {
    return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
  }
};

}  // namespace elastica
