#pragma once

#include "gak/multivector.hpp"

namespace gak {

enum class StudyClass { complex_like, split_like, dual_like };

std::string_view to_string(StudyClass c);

// Self-reverse number a + bI: a scalar plus a grade-4 part whose square is a
// scalar (always true for n <= 5). Generalizes complex (bI^2 < 0),
// split-complex (bI^2 > 0) and dual (bI^2 = 0) numbers; it is the scale
// factor of the polar decomposition X = S R.
class StudyNumber {
 public:
  // quad must be pure grade 4.
  StudyNumber(double scalar, Multivector quad);
  static StudyNumber real(const Signature& sig, double a);

  double scalar() const { return a_; }
  const Multivector& quad() const { return quad_; }
  const Signature& signature() const { return quad_.signature(); }

  // (bI)^2 as a real number.
  double quad_square() const;
  // Coefficient magnitude of bI.
  double quad_magnitude() const { return quad_.coeff_norm(); }

  StudyClass classify(double tol = kDefaultTol) const;
  Multivector to_multivector() const { return quad_ + a_; }

 private:
  double a_;
  Multivector quad_;
};

// A Study number is singular when its squared norm is at most this fraction
// of scale^2, i.e. its norm is below about 1e-6 scale. Rounding in a^2 - (bI)^2
// is of order 1e-16 scale^2, so a tighter test on the norm itself would only
// sort noise.
inline constexpr double kStudySingularEps = 1e-12;
// Relative distance from the negative real axis treated as on the branch cut.
inline constexpr double kStudyBranchEps = 1e-12;

enum class StudyBranch {
  principal,      // c+ root
  negative_real,  // sqrt(-a) J for a < 0, J a unit grade-4 blade with J^2 = -1
};

std::string_view to_string(StudyBranch b);

// Splits x into <x> + <x>_4; residue outside grades {0, 4} larger than
// tol * max(1, |x|_max) is an error.
StudyNumber study_from(const Multivector& x, double tol = kDefaultTol);

StudyNumber study_conj(const StudyNumber& s);
// sqrt(a^2 - (bI)^2). Throws complex_solution when the radicand is below
// -kStudySingularEps scale^2; smaller negative radicands give 0. scale is the
// magnitude rounding is measured against, |a| + |bI| when zero or smaller.
double study_norm(const StudyNumber& s, double scale = 0.0);
bool study_is_singular(const StudyNumber& s, double scale = 0.0);

StudyNumber study_inverse(const StudyNumber& s);

StudyBranch study_sqrt_branch(const StudyNumber& s);
StudyNumber study_sqrt(const StudyNumber& s);
StudyNumber study_inv_sqrt(const StudyNumber& s);

}  // namespace gak
