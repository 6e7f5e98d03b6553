#pragma once

#include <array>
#include <cstddef>

#include "gak/algebra.hpp"
#include "gak/multivector.hpp"

namespace gak {

// Tags for the algebras with fast kernels.
struct R31 {
  static constexpr std::size_t even_size = 8;
  static const Algebra& algebra() { return algebra_r31(); }
};
struct R301 {
  static constexpr std::size_t even_size = 8;
  static const Algebra& algebra() { return algebra_r301(); }
};
struct R4 {
  static constexpr std::size_t even_size = 8;
  static const Algebra& algebra() { return algebra_r4(); }
};
struct R41 {
  static constexpr std::size_t even_size = 16;
  static const Algebra& algebra() { return algebra_r41(); }
};

// Even-subalgebra coefficients in the algebra's packed order:
//   R31, R4 : [1,e12,e13,e14,e23,e24,e34,e1234]
//   R301    : [1,e01,e02,e03,e12,e31,e23,e0123]
//   R41     : [1,e12,e13,e14,e15,e23,e24,e25,e34,e35,e45,e1234,e1235,e1245,e1345,e2345]
template <class Alg>
struct EvenPacked {
  std::array<double, Alg::even_size> c{};

  double operator[](std::size_t i) const { return c[i]; }
  friend bool operator==(const EvenPacked&, const EvenPacked&) = default;
};

// PGA bivector [e01,e02,e03,e12,e31,e23].
struct BivectorPacked {
  std::array<double, 6> c{};

  double operator[](std::size_t i) const { return c[i]; }
  friend bool operator==(const BivectorPacked&, const BivectorPacked&) = default;
};

template <class Alg>
EvenPacked<Alg> pack_even(const Multivector& x) {
  const auto v = Alg::algebra().pack(x, Alg::algebra().even_layout());
  EvenPacked<Alg> out;
  std::copy(v.begin(), v.end(), out.c.begin());
  return out;
}

template <class Alg>
Multivector unpack(const EvenPacked<Alg>& x) {
  return Alg::algebra().unpack(x.c, Alg::algebra().even_layout());
}

BivectorPacked pack_bivector(const Multivector& b);
Multivector unpack(const BivectorPacked& b);

template <class Alg>
EvenPacked<Alg> identity() {
  EvenPacked<Alg> out;
  out.c[0] = 1.0;
  return out;
}

// Normalization kernels. Each throws gak::Error (singular, no_real_root or
// complex_solution) instead of producing NaN.
EvenPacked<R31> normalize_r31(const EvenPacked<R31>& x);
EvenPacked<R301> normalize_r301(const EvenPacked<R301>& x);
EvenPacked<R4> normalize_r4(const EvenPacked<R4>& x);
EvenPacked<R41> normalize_r41(const EvenPacked<R41>& x);

// Principal square roots: normalize(1 + R).
EvenPacked<R31> sqrt_r31(const EvenPacked<R31>& r);
EvenPacked<R301> sqrt_r301(const EvenPacked<R301>& r);
EvenPacked<R4> sqrt_r4(const EvenPacked<R4>& r);
EvenPacked<R41> sqrt_r41(const EvenPacked<R41>& r);

// PGA logarithm and exponential. log_r301 throws branch_point at R[0] = -1.
BivectorPacked log_r301(const EvenPacked<R301>& r);
EvenPacked<R301> exp_r301(const BivectorPacked& b);

}  // namespace gak
