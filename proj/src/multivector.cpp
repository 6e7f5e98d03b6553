#include "gak/multivector.hpp"

#include <algorithm>
#include <cmath>

#include "gak/study.hpp"

namespace gak {

namespace {

void require_same(const Multivector& a, const Multivector& b) {
  if (!(a.signature() == b.signature()))
    throw Error(ErrorKind::signature_mismatch,
                "signature mismatch: " + a.signature().to_string() + " vs " +
                    b.signature().to_string());
}

template <class Keep>
Multivector filtered_product(const Multivector& a, const Multivector& b, Keep keep) {
  require_same(a, b);
  const Signature& sig = a.signature();
  const int size = sig.size();
  std::array<double, kMaxBlades> out{};
  for (int i = 0; i < size; ++i) {
    const double x = a.coeff(i);
    if (x == 0.0) continue;
    for (int j = 0; j < size; ++j) {
      const double y = b.coeff(j);
      if (y == 0.0) continue;
      if (!keep(std::uint32_t(i), std::uint32_t(j))) continue;
      const int s = sig.product_sign(i, j);
      if (s != 0) out[i ^ j] += s * x * y;
    }
  }
  return Multivector(sig, std::span<const double>(out.data(), size));
}

template <class F>
Multivector map_by_grade(const Multivector& a, F factor) {
  std::array<double, kMaxBlades> out{};
  for (int i = 0; i < a.size(); ++i) out[i] = factor(std::popcount(unsigned(i))) * a.coeff(i);
  return Multivector(a.signature(), std::span<const double>(out.data(), a.size()));
}

}  // namespace

Multivector::Multivector(Signature sig) : sig_(std::move(sig)) {}

Multivector::Multivector(Signature sig, std::span<const double> coeffs) : sig_(std::move(sig)) {
  if (coeffs.size() != std::size_t(sig_.size()))
    throw Error(ErrorKind::invalid_argument, "coefficient count must equal 2^n");
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

Multivector::Multivector(Signature sig, std::initializer_list<std::pair<Blade, double>> terms)
    : sig_(std::move(sig)) {
  for (const auto& [b, v] : terms) {
    if (b.mask >= std::uint32_t(sig_.size()))
      throw Error(ErrorKind::invalid_argument, "blade outside the algebra");
    c_[b.mask] += v;
  }
}

Multivector Multivector::scalar(const Signature& sig, double value) {
  return Multivector(sig, {{Blade{0}, value}});
}

Multivector Multivector::blade(const Signature& sig, Blade b, double value) {
  return Multivector(sig, {{b, value}});
}

Multivector Multivector::basis_vector(const Signature& sig, int i, double value) {
  if (i < 0 || i >= sig.dim()) throw Error(ErrorKind::invalid_argument, "basis index out of range");
  return blade(sig, Blade{1u << i}, value);
}

Multivector Multivector::pseudoscalar(const Signature& sig) {
  return blade(sig, Blade{std::uint32_t(sig.size() - 1)});
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (double x : coeffs()) m = std::max(m, std::abs(x));
  return m;
}

double Multivector::coeff_norm() const {
  double s = 0.0;
  for (double x : coeffs()) s += x * x;
  return std::sqrt(s);
}

bool Multivector::is_finite() const {
  return std::all_of(coeffs().begin(), coeffs().end(), [](double x) { return std::isfinite(x); });
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  require_same(a, b);
  std::array<double, kMaxBlades> out{};
  for (int i = 0; i < a.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return Multivector(a.signature(), std::span<const double>(out.data(), a.size()));
}

Multivector operator-(const Multivector& a, const Multivector& b) { return a + (-b); }

Multivector operator-(const Multivector& a) { return -1.0 * a; }

Multivector operator*(double s, const Multivector& a) {
  return map_by_grade(a, [s](int) { return s; });
}

Multivector operator+(const Multivector& a, double s) {
  Multivector out = a;
  out.c_[0] += s;
  return out;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  return filtered_product(a, b, [](std::uint32_t, std::uint32_t) { return true; });
}

Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }

Multivector reverse(const Multivector& a) {
  return map_by_grade(a, [](int k) { return (k * (k - 1) / 2) % 2 ? -1.0 : 1.0; });
}

Multivector grade_involution(const Multivector& a) {
  return map_by_grade(a, [](int k) { return k % 2 ? -1.0 : 1.0; });
}

Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || k > a.dim())
    throw Error(ErrorKind::invalid_argument, "grade outside [0, n]");
  return map_by_grade(a, [k](int g) { return g == k ? 1.0 : 0.0; });
}

Multivector even_part(const Multivector& a) {
  return map_by_grade(a, [](int g) { return g % 2 ? 0.0 : 1.0; });
}

Multivector odd_part(const Multivector& a) {
  return map_by_grade(a, [](int g) { return g % 2 ? 1.0 : 0.0; });
}

std::vector<int> grades(const Multivector& a, double tol) {
  std::array<bool, kMaxDim + 1> present{};
  for (int i = 0; i < a.size(); ++i)
    if (std::abs(a.coeff(i)) > tol) present[std::popcount(unsigned(i))] = true;
  std::vector<int> out;
  for (int k = 0; k <= a.dim(); ++k)
    if (present[k]) out.push_back(k);
  return out;
}

double off_grade_residual(const Multivector& a, std::initializer_list<int> allowed) {
  double r = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    const int g = std::popcount(unsigned(i));
    if (std::find(allowed.begin(), allowed.end(), g) == allowed.end())
      r = std::max(r, std::abs(a.coeff(i)));
  }
  return r;
}

Multivector outer(const Multivector& a, const Multivector& b) {
  // e_i ^ e_j survives exactly when the blades share no factor
  return filtered_product(a, b, [](std::uint32_t i, std::uint32_t j) { return (i & j) == 0; });
}

Multivector inner_dot(const Multivector& a, const Multivector& b) {
  // the product of blades i, j lands on grade |r - s| iff one contains the other
  return filtered_product(a, b, [](std::uint32_t i, std::uint32_t j) {
    return (i & j) == i || (i & j) == j;
  });
}

Multivector commutator(const Multivector& a, const Multivector& b) {
  return 0.5 * (a * b - b * a);
}

Multivector inverse(const Multivector& a) {
  const bool has_even = even_part(a).max_abs() > 0.0;
  const bool has_odd = odd_part(a).max_abs() > 0.0;
  if (has_even && has_odd)
    throw Error(ErrorKind::invalid_argument, "inverse needs an element of homogeneous parity");
  const Multivector ar = reverse(a);
  const StudyNumber s = study_from(a * ar);
  return ar * study_inverse(s).to_multivector();
}

Multivector conjugate(const Multivector& u, const Multivector& v) {
  require_same(u, v);
  const bool u_even = odd_part(u).max_abs() == 0.0;
  const bool u_odd = even_part(u).max_abs() == 0.0;
  if (!u_even && !u_odd)
    throw Error(ErrorKind::invalid_argument, "conjugation needs U of homogeneous parity");
  const Multivector signed_v = u_even ? v : grade_involution(v);
  return u * signed_v * inverse(u);
}

Multivector sandwich(const Multivector& u, const Multivector& x) {
  return u * x * reverse(u);
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
  return (a - b).max_abs();
}

}  // namespace gak
