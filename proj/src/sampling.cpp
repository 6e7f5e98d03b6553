#include "gak/sampling.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "gak/rotor.hpp"

namespace gak {

namespace {

Multivector random_grade(std::mt19937_64& rng, const Signature& sig, int grade_mask_parity,
                         int only_grade) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::array<double, kMaxBlades> c{};
  for (int m = 0; m < sig.size(); ++m) {
    const int g = std::popcount(std::uint32_t(m));
    const bool take = only_grade >= 0 ? g == only_grade : (g % 2) == grade_mask_parity;
    if (take) c[m] = u(rng);
  }
  return Multivector(sig, std::span<const double>(c.data(), sig.size()));
}

// Distance of S from the singular sets of S^{-1/2}: norm / scale and
// norm (norm + a) / scale^2, whichever is smaller. Zero when the Study norm is
// complex.
double inv_sqrt_margin(const StudyNumber& s, double scale = 0.0) {
  const double a = s.scalar();
  const double rad = a * a - s.quad_square();
  if (rad < 0.0) return 0.0;
  const double n = std::sqrt(rad);
  scale = std::max(scale, std::abs(a) + s.quad_magnitude());
  if (scale == 0.0) return 0.0;
  return std::min(n / scale, n * (n + a) / (scale * scale));
}

}  // namespace

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Multivector Sampler::vector(const Signature& sig) { return random_grade(rng_, sig, 0, 1); }
Multivector Sampler::bivector(const Signature& sig) { return random_grade(rng_, sig, 0, 2); }
Multivector Sampler::even(const Signature& sig) { return random_grade(rng_, sig, 0, -1); }

bool well_conditioned_even(const Multivector& x) {
  const StudyNumber s = study_from(x * reverse(x));
  return inv_sqrt_margin(s, polar_scale(x)) >= kSampleSingularEps;
}

Multivector Sampler::nonsingular_even(const Signature& sig) {
  while (true) {
    Multivector x = even(sig);
    if (well_conditioned_even(x)) return x;
    ++rejected_;
  }
}

Multivector Sampler::bivector_in_ball(const Signature& sig, double max_norm) {
  while (true) {
    Multivector b = bivector(sig);
    const double n = b.coeff_norm();
    if (n == 0.0) {
      ++rejected_;
      continue;
    }
    return b * (uniform(0.0, max_norm) / n);
  }
}

Multivector Sampler::rotor_generator(const Signature& sig) {
  while (true) {
    const Multivector b = bivector(sig);
    std::optional<BivectorSplit> split;
    try {
      split = invariant_split(b);
    } catch (const Error&) {
      ++rejected_;
      continue;
    }
    const BivectorSplit& sp = *split;
    if (sp.degenerate) {
      ++rejected_;
      continue;
    }
    const Multivector* parts[2] = {&sp.b_minus, &sp.b_plus};
    const double lambdas[2] = {sp.lambda_minus, sp.lambda_plus};
    Multivector out(sig);
    double angles[2] = {-1.0, -1.0};
    bool ok = true;
    for (int k = 0; k < 2 && ok; ++k) {
      const Multivector& f = *parts[k];
      const double size = f.coeff_norm();
      if (size < 1e-3) continue;
      const double l = lambdas[k];
      const double tol = 1e-6 * size * size;
      if (l < -tol) {
        double theta = uniform(0.05, 3.0);
        // B isoclinic when the angles match, exp(B) when they add up to pi
        if (k == 1 && angles[0] > 0.0 &&
            (std::abs(theta - angles[0]) < 0.05 ||
             std::abs(theta + angles[0] - std::numbers::pi) < 0.05))
          ok = false;
        angles[k] = theta;
        out = out + f * (theta / std::sqrt(-l));
      } else if (l > tol) {
        out = out + f * (uniform(0.05, 1.5) / std::sqrt(l));
      } else {
        out = out + f * (uniform(0.0, 2.0) / size);
      }
    }
    // the principal square root normalizes 1 + R, so keep away from its
    // singular set too
    if (!ok || out.max_abs() == 0.0 || !well_conditioned_even(exp_bivector(out).value() + 1.0)) {
      ++rejected_;
      continue;
    }
    return out;
  }
}

StudyNumber Sampler::study(const Signature& sig, StudyClass cls) {
  std::vector<std::uint32_t> blades;
  for (int m = 0; m < sig.size(); ++m) {
    if (std::popcount(std::uint32_t(m)) != 4) continue;
    const int sq = sig.product_sign(m, m);
    if ((cls == StudyClass::complex_like && sq < 0) || (cls == StudyClass::split_like && sq > 0) ||
        (cls == StudyClass::dual_like && sq == 0))
      blades.push_back(std::uint32_t(m));
  }
  if (blades.empty())
    throw Error(ErrorKind::invalid_argument,
                "signature " + sig.to_string() + " has no grade-4 blade of class " +
                    std::string(to_string(cls)));
  std::uniform_int_distribution<std::size_t> pick(0, blades.size() - 1);
  while (true) {
    const double a = uniform();
    const Multivector quad = Multivector::blade(sig, Blade{blades[pick(rng_)]}, uniform());
    StudyNumber s(a, quad);
    // split and dual numbers with a <= 0 have no real root
    const bool rooted = cls == StudyClass::complex_like || a > 0.0;
    if (rooted && inv_sqrt_margin(s) >= kSampleSingularEps) return s;
    ++rejected_;
  }
}

}  // namespace gak
