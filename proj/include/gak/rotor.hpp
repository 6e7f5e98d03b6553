#pragma once

#include <optional>

#include "gak/multivector.hpp"
#include "gak/study.hpp"

namespace gak {

// Even multivector satisfying R reverse(R) = 1.
class Rotor {
 public:
  // Throws invalid_argument unless value is even and satisfies the rotor
  // condition within tol (scaled by max(1, |value|_max)).
  explicit Rotor(Multivector value, double tol = kDefaultTol);
  static Rotor identity(const Signature& sig);

  const Multivector& value() const { return value_; }
  const Signature& signature() const { return value_.signature(); }

  // Largest componentwise |R reverse(R) - 1|.
  static double condition_residual(const Multivector& r);

 private:
  struct unchecked_t {};
  Rotor(Multivector value, unchecked_t) : value_(std::move(value)) {}
  friend Rotor make_rotor_unchecked(Multivector);

  Multivector value_;
};

Rotor make_rotor_unchecked(Multivector value);

enum class NormBranch {
  principal,  // R = (X X~)^{-1/2} X
  magnitude,  // a negative real X X~ is replaced by |X X~|; otherwise principal
};

struct PolarParts {
  StudyNumber scale;  // S with X = S R
  Rotor rotor;
  StudyBranch branch = StudyBranch::principal;
  bool used_magnitude = false;  // the magnitude branch changed the result
};

// Scale against which the Study norm of X reverse(X) is judged singular: the
// squared coefficient norm of X.
double polar_scale(const Multivector& x);

// Polar decomposition of an even element. Throws singular when X X~ has zero
// Study norm (no unambiguous nearest rotor).
PolarParts normalize(const Multivector& x, NormBranch branch = NormBranch::principal);

// Principal square root, normalize(1 + R).
Rotor sqrt_rotor(const Rotor& r);

struct BivectorSplit {
  Multivector b_plus;
  Multivector b_minus;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  // Isoclinic: the split is not unique. b_plus holds the whole bivector and
  // both lambdas hold half the scalar part of B^2.
  bool degenerate = false;
};

inline constexpr double kSplitDegenerateEps = 1e-9;

// Invariant decomposition of a bivector into commuting simple bivectors.
BivectorSplit invariant_split(const Multivector& b);

// exp of a bivector whose square is a scalar.
Rotor exp_simple(const Multivector& b, double tol = kDefaultTol);
Rotor exp_bivector(const Multivector& b);
// Truncated power series; stops once every coefficient of the latest term is
// below tol. Throws not_converged past max_terms.
Rotor exp_series(const Multivector& b, double tol = 1e-13, int max_terms = 64);

// Principal logarithm. Throws branch_point for -1 (and -exp(b) with b not a
// rotation), non_unique for isoclinic rotors.
Multivector log_rotor(const Rotor& r);

Rotor rotor_power(const Rotor& r, double t);

struct Trireflection {
  Multivector reflection;  // r, with r^2 = +-1 when P is normalized
  Multivector rotor;       // R with r R = R r = P
};

// Splits an odd element into a commuting reflection and bireflection. Without
// a probe, basis vectors e_1..e_n are tried in turn for the fallback.
Trireflection decompose_trireflection(const Multivector& p,
                                      std::optional<Multivector> probe = std::nullopt);

}  // namespace gak
