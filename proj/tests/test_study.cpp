#include <doctest.h>

#include <random>

#include "gak/algebra.hpp"
#include "gak/study.hpp"
#include "oracle.hpp"

using namespace gak;

namespace {

StudyNumber study(const Signature& sig, double a, double b) {
  return StudyNumber(a, Multivector::blade(sig, Blade{0b1111}, b));
}

double quad_coeff(const StudyNumber& s) { return s.quad()[Blade{0b1111}]; }

}  // namespace

TEST_CASE("worked values on complex-like numbers") {
  const Signature& sig = algebra_r31().signature();  // e1234^2 = -1
  const StudyNumber s = study(sig, 0.99, 0.2);
  CHECK(s.classify() == StudyClass::complex_like);
  CHECK(study_norm(s) == doctest::Approx(1.01).epsilon(1e-15));
  const StudyNumber r = study_sqrt(s);
  CHECK(r.scalar() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(quad_coeff(r) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("square roots agree with the complex, split and dual oracles") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::pair<const Signature*, int> cases[] = {
      {&algebra_r31().signature(), -1}, {&algebra_r4().signature(), 1}, {&algebra_r301().signature(), 0}};
  for (auto [sig, isq] : cases) {
    int tested = 0;
    while (tested < 200) {
      const double a = u(rng), b = u(rng);
      if (isq >= 0 && a <= std::abs(b)) continue;  // no real root there
      ++tested;
      const StudyNumber s = study(*sig, a, b);
      const auto [c, d] = oracle::study_sqrt(a, b, isq);
      const StudyNumber r = study_sqrt(s);
      CHECK(r.scalar() == doctest::Approx(c).epsilon(1e-12));
      CHECK(quad_coeff(r) == doctest::Approx(d).epsilon(1e-12));
      const StudyNumber ri = study_inv_sqrt(s);
      const Multivector one = ri.to_multivector() * r.to_multivector();
      CHECK(max_abs_diff(one, Multivector::scalar(*sig, 1.0)) < 1e-12);
    }
  }
}

TEST_CASE("classification and conjugate") {
  CHECK(study(algebra_r4().signature(), 1, 0.5).classify() == StudyClass::split_like);
  CHECK(study(algebra_r301().signature(), 1, 0.5).classify() == StudyClass::dual_like);
  const StudyNumber s = study(algebra_r31().signature(), 2, 3);
  CHECK(quad_coeff(study_conj(s)) == -3.0);
  const Multivector p = s.to_multivector() * study_inverse(s).to_multivector();
  CHECK(max_abs_diff(p, Multivector::scalar(s.signature(), 1.0)) < 1e-15);
}

TEST_CASE("light-cone numbers are singular") {
  const Signature& sig = algebra_r4().signature();  // I^2 = +1
  for (double a : {1.0, -2.0, 0.5}) {
    for (double sgn : {1.0, -1.0}) {
      const StudyNumber s = study(sig, a, sgn * std::abs(a));
      CHECK(study_is_singular(s));
      CHECK_THROWS_AS(study_inverse(s), Error);
      CHECK_THROWS_AS(study_sqrt(s), Error);
      CHECK_THROWS_AS(study_inv_sqrt(s), Error);
    }
  }
}

TEST_CASE("branch policy") {
  // negative real with I^2 = -1 available: sqrt(-a) J
  const Signature& sta = algebra_r31().signature();
  const StudyNumber neg = StudyNumber::real(sta, -4.0);
  CHECK(study_sqrt_branch(neg) == StudyBranch::negative_real);
  const StudyNumber r = study_sqrt(neg);
  CHECK(r.scalar() == 0.0);
  CHECK(std::abs(quad_coeff(r)) == 2.0);
  const Multivector sq = r.to_multivector() * r.to_multivector();
  CHECK(max_abs_diff(sq, Multivector::scalar(sta, -4.0)) < 1e-15);

  // just off the cut the principal root is continuous from above
  const StudyNumber above = study(sta, -1.0, 1e-9);
  CHECK(study_sqrt(above).scalar() == doctest::Approx(5e-10).epsilon(1e-6));

  // no grade-4 blade squares to -1 in R4: no real root
  CHECK_THROWS_AS(study_sqrt(StudyNumber::real(algebra_r4().signature(), -1.0)), Error);
  // split-like with a < 0 has no real root
  try {
    study_sqrt(study(algebra_r4().signature(), -1.0, 0.5));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_real_root);
  }
  // complex norm: (bI)^2 > a^2 with I^2 = +1
  CHECK_THROWS_AS(study_norm(study(algebra_r4().signature(), 0.1, 1.0)), Error);
}

TEST_CASE("study_from checks grades") {
  const Signature& sig = algebra_r4().signature();
  CHECK_THROWS_AS(study_from(Multivector::blade(sig, Blade{0b0011})), Error);
  CHECK_THROWS_AS(StudyNumber(1.0, Multivector::blade(sig, Blade{0b0011})), Error);
  const StudyNumber s = study_from(Multivector::scalar(sig, 2.0) + Multivector::blade(sig, Blade{0b1111}, 1.0));
  CHECK(s.scalar() == 2.0);
  CHECK(s.quad_square() == 1.0);
  CHECK(study_sqrt(StudyNumber::real(sig, 0.0)).scalar() == 0.0);
}
