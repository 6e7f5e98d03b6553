#pragma once

#include <cstdint>
#include <random>

#include "gak/multivector.hpp"
#include "gak/study.hpp"

namespace gak {

// Relative threshold for rejecting near-singular random inputs.
inline constexpr double kSampleSingularEps = 1e-6;

// Seeded generators for the property suites. Coefficients are uniform in
// [-1, 1]; draws that land near a singular set are resampled and counted.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0);

  Multivector vector(const Signature& sig);
  Multivector bivector(const Signature& sig);
  Multivector even(const Signature& sig);

  // Even X whose X reverse(X) has a real Study norm, is at least
  // kSampleSingularEps away from zero norm relative to polar_scale(X), and
  // has norm (norm + <S>) at least kSampleSingularEps scale^2 (the branch
  // cut of the inverse square root).
  Multivector nonsingular_even(const Signature& sig);

  // Bivector with coefficient norm uniform in [0, max_norm].
  Multivector bivector_in_ball(const Signature& sig, double max_norm);

  // Generator of a test rotor: non-isoclinic, rotation factors rescaled to
  // angles in (0.05, 3.0), boost factors to rapidities in (0.05, 1.5), null
  // factors kept with coefficient norm at most 2. Angles of two rotation
  // factors differ by at least 0.05 and their sum stays 0.05 away from pi,
  // where the bivector part of exp(B) turns isoclinic. 1 + exp(B) passes the same test as
  // nonsingular_even.
  Multivector rotor_generator(const Signature& sig);

  // a + bI with a, b uniform; the grade-4 blade is drawn among those whose
  // square puts the number in the requested class. Rejects draws with a
  // near-zero norm or no real square root.
  StudyNumber study(const Signature& sig, StudyClass cls);

  long rejected() const { return rejected_; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  long rejected_ = 0;
};

// true when X reverse(X) passes the checks of Sampler::nonsingular_even.
bool well_conditioned_even(const Multivector& x);

}  // namespace gak
