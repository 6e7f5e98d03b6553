#pragma once

// Coefficient-level kernels, templated on the scalar so the op-count harness
// can run them on Counted values. Arithmetic is written out term for term
// so the counts are exact; guards run on plain doubles and are not counted.

#include <array>
#include <cmath>
#include <numbers>

#include "gak/error.hpp"
#include "gak/op_count.hpp"
#include "gak/study.hpp"

namespace gak::detail {

template <class T>
using Even8 = std::array<T, 8>;
template <class T>
using Even16 = std::array<T, 16>;
template <class T>
using Biv6 = std::array<T, 6>;

// Sum of squared packed coefficients, the scale of X reverse(X).
template <class T, std::size_t N>
double coeff_norm2(const std::array<T, N>& x) {
  double out = 0.0;
  for (const T& v : x) out += to_double(v) * to_double(v);
  return out;
}

// Same verdicts as the generic Study-number path on s + t I, with x2 the
// squared coefficient norm of X.
inline void guard_study(double s, double quad_sq, double quad_mag, double x2) {
  const double rad = s * s - quad_sq;
  const double scale = std::max(x2, std::abs(s) + quad_mag);
  if (rad < -kStudySingularEps * scale * scale)
    throw Error(ErrorKind::complex_solution, "X reverse(X) has a complex Study norm");
  if (rad <= kStudySingularEps * scale * scale)
    throw Error(ErrorKind::singular, "X reverse(X) is singular: no unambiguous nearest rotor");
  if (s < 0.0 && quad_mag <= kStudyBranchEps * std::abs(s))
    throw Error(ErrorKind::no_real_root, "X reverse(X) is a negative real: outside the real branch");
}

inline void guard_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw Error(ErrorKind::no_real_root, what);
}

// sqrt(s^2 + d) + s. For s < 0 the direct sum cancels near the negative
// real axis, so the equal quotient d / (sqrt(s^2 + d) - s) is used instead.
template <class T>
T root_plus_s(T radicand, T s, T d) {
  T root = ksqrt(radicand);
  if (to_double(s) >= 0.0) return root + s;
  return d / (root - s);
}

template <class T>
Even8<T> normalize_r31(const Even8<T>& X) {
  T S = X[0]*X[0]+X[1]*X[1]+X[2]*X[2]-X[3]*X[3]+X[4]*X[4]-X[5]*X[5]-X[6]*X[6]-X[7]*X[7];
  T T_ = T(2)*(X[0]*X[7]-X[1]*X[6]+X[2]*X[5]-X[3]*X[4]);
  const double s = to_double(S), t = to_double(T_);
  guard_study(s, -t * t, std::abs(t), coeff_norm2(X));
  guard_positive(std::sqrt(s * s + t * t) + s, "normalize_r31: input is outside the real branch");
  T N = ksqrt(root_plus_s(S*S+T_*T_, S, T_*T_)), N2 = N*N;
  T M = T(std::numbers::sqrt2)*N/(N2*N2+T_*T_);
  T A = N2*M, B = -T_*M;
  return {A*X[0]-B*X[7], A*X[1]+B*X[6], A*X[2]-B*X[5], A*X[3]-B*X[4],
          A*X[4]+B*X[3], A*X[5]+B*X[2], A*X[6]-B*X[1], A*X[7]+B*X[0]};
}

template <class T>
Even8<T> normalize_r301(const Even8<T>& X) {
  T s = X[0]*X[0] + X[4]*X[4] + X[5]*X[5] + X[6]*X[6];
  {
    const auto x = [&](int i) { return to_double(X[i]); };
    const double t = 2.0 * (x(7) * x(0) - (x(1) * x(6) + x(2) * x(5) + x(3) * x(4)));
    guard_study(to_double(s), 0.0, std::abs(t), coeff_norm2(X));
  }
  T A = T(1)/ksqrt(s);
  T B = (X[7]*X[0] - (X[1]*X[6] + X[2]*X[5] + X[3]*X[4]))*A*A*A;
  return {A*X[0], A*X[1]+B*X[6], A*X[2]+B*X[5], A*X[3]+B*X[4],
          A*X[4], A*X[5], A*X[6], A*X[7]-B*X[0]};
}

template <class T>
Even8<T> normalize_r4(const Even8<T>& X) {
  T S = X[0]*X[0]+X[1]*X[1]+X[2]*X[2]+X[3]*X[3]+X[4]*X[4]+X[5]*X[5]+X[6]*X[6]+X[7]*X[7];
  T T_ = T(2)*(X[0]*X[7]-X[1]*X[6]+X[2]*X[5]-X[3]*X[4]);
  const double s = to_double(S), t = to_double(T_);
  guard_study(s, t * t, std::abs(t), coeff_norm2(X));
  T N = ksqrt(ksqrt(S*S-T_*T_)+S), N2 = N*N;
  T M = T(std::numbers::sqrt2)*N/(N2*N2-T_*T_);
  T A = N2*M, B = -T_*M;
  return {A*X[0]+B*X[7], A*X[1]-B*X[6], A*X[2]+B*X[5], A*X[3]-B*X[4],
          A*X[4]-B*X[3], A*X[5]+B*X[2], A*X[6]-B*X[1], A*X[7]+B*X[0]};
}

template <class T>
Even16<T> normalize_r41(const Even16<T>& X) {
  T S  = X[0]*X[0]-X[10]*X[10]+X[11]*X[11]-X[12]*X[12]-X[13]*X[13]-X[14]*X[14]-X[15]*X[15]+X[1]*X[1]
        +X[2]*X[2]+X[3]*X[3]-X[4]*X[4]+X[5]*X[5]+X[6]*X[6]-X[7]*X[7]+X[8]*X[8]-X[9]*X[9];
  T T1 = T(2)*(X[0]*X[11]-X[10]*X[12]+X[13]*X[9]-X[14]*X[7]+X[15]*X[4]-X[1]*X[8]+X[2]*X[6]-X[3]*X[5]);
  T T2 = T(2)*(X[0]*X[12]-X[10]*X[11]+X[13]*X[8]-X[14]*X[6]+X[15]*X[3]-X[1]*X[9]+X[2]*X[7]-X[4]*X[5]);
  T T3 = T(2)*(X[0]*X[13]-X[10]*X[1]+X[11]*X[9]-X[12]*X[8]+X[14]*X[5]-X[15]*X[2]+X[3]*X[7]-X[4]*X[6]);
  T T4 = T(2)*(X[0]*X[14]-X[10]*X[2]-X[11]*X[7]+X[12]*X[6]-X[13]*X[5]+X[15]*X[1]+X[3]*X[9]-X[4]*X[8]);
  T T5 = T(2)*(X[0]*X[15]-X[10]*X[5]+X[11]*X[4]-X[12]*X[3]+X[13]*X[2]-X[14]*X[1]+X[6]*X[9]-X[7]*X[8]);
  T TT = -T1*T1+T2*T2+T3*T3+T4*T4+T5*T5;
  {
    const double s = to_double(S);
    const double t[5] = {to_double(T1), to_double(T2), to_double(T3), to_double(T4), to_double(T5)};
    double mag2 = 0.0;
    for (double ti : t) mag2 += ti * ti;
    guard_study(s, -to_double(TT), std::sqrt(mag2), coeff_norm2(X));
    guard_positive(std::sqrt(s * s + to_double(TT)) + s,
                   "normalize_r41: input is outside the real branch");
  }
  T N = ksqrt(root_plus_s(S*S+TT, S, TT)), N2 = N*N;
  T M = T(std::numbers::sqrt2)*N/(N2*N2+TT);
  T A = N2*M, B1 = -T1*M, B2 = -T2*M, B3 = -T3*M, B4 = -T4*M, B5 = -T5*M;
  return {A*X[0]  + B1*X[11] - B2*X[12] - B3*X[13] - B4*X[14] - B5*X[15],
          A*X[1]  - B1*X[8]  + B2*X[9]  + B3*X[10] - B4*X[15] + B5*X[14],
          A*X[2]  + B1*X[6]  - B2*X[7]  + B3*X[15] + B4*X[10] - B5*X[13],
          A*X[3]  - B1*X[5]  - B2*X[15] - B3*X[7]  - B4*X[9]  + B5*X[12],
          A*X[4]  - B1*X[15] - B2*X[5]  - B3*X[6]  - B4*X[8]  + B5*X[11],
          A*X[5]  - B1*X[3]  + B2*X[4]  - B3*X[14] + B4*X[13] + B5*X[10],
          A*X[6]  + B1*X[2]  + B2*X[14] + B3*X[4]  - B4*X[12] - B5*X[9],
          A*X[7]  + B1*X[14] + B2*X[2]  + B3*X[3]  - B4*X[11] - B5*X[8],
          A*X[8]  - B1*X[1]  - B2*X[13] + B3*X[12] + B4*X[4]  + B5*X[7],
          A*X[9]  - B1*X[13] - B2*X[1]  + B3*X[11] + B4*X[3]  + B5*X[6],
          A*X[10] + B1*X[12] - B2*X[11] - B3*X[1]  - B4*X[2]  - B5*X[5],
          A*X[11] + B1*X[0]  + B2*X[10] - B3*X[9]  + B4*X[7]  - B5*X[4],
          A*X[12] + B1*X[10] + B2*X[0]  - B3*X[8]  + B4*X[6]  - B5*X[3],
          A*X[13] - B1*X[9]  + B2*X[8]  + B3*X[0]  - B4*X[5]  + B5*X[2],
          A*X[14] + B1*X[7]  - B2*X[6]  + B3*X[5]  + B4*X[0]  - B5*X[1],
          A*X[15] - B1*X[4]  + B2*X[3]  - B3*X[2]  + B4*X[1]  + B5*X[0]};
}

template <class T>
Biv6<T> log_r301(const Even8<T>& R) {
  if (R[0] == T(1)) return {R[1], R[2], R[3], T(0), T(0), T(0)};
  {
    const double r0 = to_double(R[0]);
    if (!(1.0 - r0 * r0 > 0.0)) {
      if (r0 > 0.0) return {R[1], R[2], R[3], T(0), T(0), T(0)};
      throw Error(ErrorKind::branch_point, "log_r301: logarithm at R[0] = -1 is undefined");
    }
  }
  T a = T(1)/(T(1) - R[0]*R[0]), b = kacos(R[0])*ksqrt(a), c = a*R[7]*(T(1) - R[0]*b);
  return {c*R[6] + b*R[1], c*R[5] + b*R[2], c*R[4] + b*R[3], b*R[4], b*R[5], b*R[6]};
}

template <class T>
Even8<T> exp_r301(const Biv6<T>& B) {
  T l = (B[3]*B[3] + B[4]*B[4] + B[5]*B[5]);
  if (l == T(0) || to_double(l) < 1e-300) return {T(1), B[0], B[1], B[2], T(0), T(0), T(0), T(0)};
  T m = (B[0]*B[5] + B[1]*B[4] + B[2]*B[3]), a = ksqrt(l);
  auto [sin_a, c] = ksincos(a);
  T s = sin_a/a, t = m/l*(c - s);
  return {c, s*B[0] + t*B[5], s*B[1] + t*B[4], s*B[2] + t*B[3], s*B[3], s*B[4], s*B[5], m*s};
}

}  // namespace gak::detail
