#pragma once

#include <array>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "gak/error.hpp"
#include "gak/signature.hpp"

namespace gak {

inline constexpr double kDefaultTol = 1e-10;

// Dense multivector over all 2^n basis blades of a signature, stored in
// ascending blade-mask order. Values are immutable; every operation returns a
// new multivector.
class Multivector {
 public:
  explicit Multivector(Signature sig);
  Multivector(Signature sig, std::span<const double> coeffs);
  // (blade, coefficient) pairs; repeated blades accumulate.
  Multivector(Signature sig, std::initializer_list<std::pair<Blade, double>> terms);

  static Multivector scalar(const Signature& sig, double value);
  static Multivector blade(const Signature& sig, Blade b, double value = 1.0);
  static Multivector basis_vector(const Signature& sig, int i, double value = 1.0);
  // Unit pseudoscalar e_{12...n}.
  static Multivector pseudoscalar(const Signature& sig);

  const Signature& signature() const { return sig_; }
  int dim() const { return sig_.dim(); }
  int size() const { return sig_.size(); }

  double operator[](Blade b) const { return c_[b.mask]; }
  double coeff(std::uint32_t mask) const { return c_[mask]; }
  std::span<const double> coeffs() const { return {c_.data(), std::size_t(size())}; }

  double scalar_part() const { return c_[0]; }

  // Largest absolute coefficient.
  double max_abs() const;
  // Euclidean norm of the coefficient vector (not a metric norm).
  double coeff_norm() const;
  bool is_finite() const;

  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a);
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend Multivector operator*(double s, const Multivector& a);
  friend Multivector operator*(const Multivector& a, double s) { return s * a; }
  friend Multivector operator/(const Multivector& a, double s) { return (1.0 / s) * a; }
  friend Multivector operator+(const Multivector& a, double s);
  friend Multivector operator+(double s, const Multivector& a) { return a + s; }
  friend Multivector operator-(const Multivector& a, double s) { return a + (-s); }

 private:
  Signature sig_;
  std::array<double, kMaxBlades> c_{};
};

Multivector geometric_product(const Multivector& a, const Multivector& b);

Multivector reverse(const Multivector& a);
Multivector grade_involution(const Multivector& a);
// Throws invalid_argument if k is outside [0, n].
Multivector grade_project(const Multivector& a, int k);
Multivector even_part(const Multivector& a);
Multivector odd_part(const Multivector& a);
// Grades carrying a coefficient with magnitude above tol, ascending.
std::vector<int> grades(const Multivector& a, double tol = 0.0);

// Largest |coefficient| outside the listed grades.
double off_grade_residual(const Multivector& a, std::initializer_list<int> allowed);

// Sum over grade pairs (r, s) of <a_r b_s>_{r+s}.
Multivector outer(const Multivector& a, const Multivector& b);
// Sum over grade pairs (r, s) of <a_r b_s>_{|r-s|} (the "fat" dot).
Multivector inner_dot(const Multivector& a, const Multivector& b);
// (ab - ba) / 2
Multivector commutator(const Multivector& a, const Multivector& b);

// Inverse through the Study number a * reverse(a). Valid for elements of
// homogeneous parity, which covers every versor in n <= 5.
Multivector inverse(const Multivector& a);

// Graded conjugation V -> (-1)^{grade(U) grade(V)} U V U^-1, applied per
// grade part of V. U must have homogeneous parity.
Multivector conjugate(const Multivector& u, const Multivector& v);

// Sandwich x -> U x reverse(U), no grade signs, no inverse.
Multivector sandwich(const Multivector& u, const Multivector& x);

// Largest componentwise |a - b|.
double max_abs_diff(const Multivector& a, const Multivector& b);

}  // namespace gak
