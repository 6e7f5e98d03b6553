#include "gak/study.hpp"

#include <bit>
#include <cmath>
#include <optional>

namespace gak {

namespace {

// Unit grade-4 basis blade squaring to -1, if the algebra has one.
std::optional<Multivector> negative_unit_quad(const Signature& sig) {
  for (std::uint32_t m = 0; m < std::uint32_t(sig.size()); ++m) {
    if (std::popcount(m) != 4) continue;
    // reverse of a grade-4 blade is itself, so J^2 = J J~ sign
    if (sig.product_sign(m, m) == -1) return Multivector::blade(sig, Blade{m});
  }
  return std::nullopt;
}

bool on_negative_real_axis(const StudyNumber& s) {
  return s.scalar() < 0.0 && s.quad_magnitude() <= kStudyBranchEps * std::abs(s.scalar());
}

// c+^2 = (a + |S|) / 2, evaluated without cancellation when a < 0.
double half_sum(const StudyNumber& s, double norm) {
  const double a = s.scalar();
  if (a >= 0.0) return 0.5 * (a + norm);
  return 0.5 * (-s.quad_square()) / (norm - a);
}

}  // namespace

std::string_view to_string(StudyClass c) {
  switch (c) {
    case StudyClass::complex_like: return "complex-like";
    case StudyClass::split_like: return "split-like";
    case StudyClass::dual_like: return "dual-like";
  }
  return "unknown";
}

std::string_view to_string(StudyBranch b) {
  return b == StudyBranch::principal ? "principal" : "negative-real";
}

StudyNumber::StudyNumber(double scalar, Multivector quad) : a_(scalar), quad_(std::move(quad)) {
  if (off_grade_residual(quad_, {4}) != 0.0)
    throw Error(ErrorKind::invalid_argument, "Study number quad part must be pure grade 4");
}

StudyNumber StudyNumber::real(const Signature& sig, double a) {
  return StudyNumber(a, Multivector(sig));
}

double StudyNumber::quad_square() const {
  return (quad_ * quad_).scalar_part();
}

StudyClass StudyNumber::classify(double tol) const {
  const double q2 = quad_square();
  const double m2 = quad_magnitude() * quad_magnitude();
  if (std::abs(q2) <= tol * m2 || m2 == 0.0) return StudyClass::dual_like;
  return q2 < 0.0 ? StudyClass::complex_like : StudyClass::split_like;
}

StudyNumber study_from(const Multivector& x, double tol) {
  const double residual = off_grade_residual(x, {0, 4});
  if (residual > tol * std::max(1.0, x.max_abs()))
    throw Error(ErrorKind::invalid_argument,
                "not a Study number: components outside grades 0 and 4");
  return StudyNumber(x.scalar_part(), x.dim() >= 4 ? grade_project(x, 4) : Multivector(x.signature()));
}

StudyNumber study_conj(const StudyNumber& s) { return StudyNumber(s.scalar(), -s.quad()); }

double study_scale(const StudyNumber& s, double scale) {
  return std::max(scale, std::abs(s.scalar()) + s.quad_magnitude());
}

double study_norm(const StudyNumber& s, double scale) {
  const double a = s.scalar();
  const double rad = a * a - s.quad_square();
  if (rad < 0.0) {
    const double sc = study_scale(s, scale);
    if (rad >= -kStudySingularEps * sc * sc) return 0.0;
    throw Error(ErrorKind::complex_solution, "Study norm has a negative radicand");
  }
  return std::sqrt(rad);
}

bool study_is_singular(const StudyNumber& s, double scale) {
  const double n = study_norm(s, scale);
  const double sc = study_scale(s, scale);
  return n * n <= kStudySingularEps * sc * sc;
}

StudyNumber study_inverse(const StudyNumber& s) {
  if (study_is_singular(s)) throw Error(ErrorKind::singular, "singular Study number has no inverse");
  const double n = study_norm(s);
  const double inv = 1.0 / (n * n);
  return StudyNumber(s.scalar() * inv, -inv * s.quad());
}

StudyBranch study_sqrt_branch(const StudyNumber& s) {
  return on_negative_real_axis(s) ? StudyBranch::negative_real : StudyBranch::principal;
}

StudyNumber study_sqrt(const StudyNumber& s) {
  const Signature& sig = s.signature();
  if (on_negative_real_axis(s)) {
    auto j = negative_unit_quad(sig);
    if (!j) throw Error(ErrorKind::no_real_root, "negative real has no Study square root here");
    return StudyNumber(0.0, std::sqrt(-s.scalar()) * *j);
  }
  if (study_is_singular(s)) {
    if (s.quad_magnitude() == 0.0) return StudyNumber::real(sig, 0.0);
    throw Error(ErrorKind::singular, "singular Study number has no square root");
  }
  const double c2 = half_sum(s, study_norm(s));
  if (!(c2 > 0.0)) throw Error(ErrorKind::no_real_root, "no real Study square root");
  const double c = std::sqrt(c2);
  return StudyNumber(c, (0.5 / c) * s.quad());
}

StudyNumber study_inv_sqrt(const StudyNumber& s) {
  const Signature& sig = s.signature();
  if (on_negative_real_axis(s)) {
    auto j = negative_unit_quad(sig);
    if (!j) throw Error(ErrorKind::no_real_root, "negative real has no Study square root here");
    // (sqrt(-a) J)^-1 = -J / sqrt(-a) since J^2 = -1
    return StudyNumber(0.0, (-1.0 / std::sqrt(-s.scalar())) * *j);
  }
  if (study_is_singular(s)) throw Error(ErrorKind::singular, "singular Study number has no inverse square root");
  const double c2 = half_sum(s, study_norm(s));
  if (!(c2 > 0.0)) throw Error(ErrorKind::no_real_root, "no real Study square root");
  const double c = std::sqrt(c2);
  const double denom = 4.0 * c2 * c2 - s.quad_square();
  if (!(std::abs(denom) > 0.0)) throw Error(ErrorKind::singular, "inverse square root denominator vanishes");
  return StudyNumber(4.0 * c2 * c / denom, (-2.0 * c / denom) * s.quad());
}

}  // namespace gak
