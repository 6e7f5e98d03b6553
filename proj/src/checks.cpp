#include "gak/checks.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "gak/algebra.hpp"
#include "gak/kernels.hpp"
#include "gak/rotor.hpp"
#include "gak/sampling.hpp"

namespace gak {

namespace {

class Recorder {
 public:
  Recorder(CheckReport& r, std::string algebra) : report_(r), algebra_(std::move(algebra)) {}

  PropertyResult& property(const std::string& name, double tol) {
    for (auto& p : report_.properties)
      if (p.algebra == algebra_ && p.property == name) return p;
    report_.properties.push_back({algebra_, name, tol});
    return report_.properties.back();
  }

  void record(const std::string& name, double tol, double residual) {
    auto& p = property(name, tol);
    ++p.samples;
    if (!(residual <= p.max_residual)) p.max_residual = residual;  // NaN sticks
  }

  // Runs f, recording its residual or an unexpected-error failure.
  void guarded(const std::string& name, double tol, const std::function<double()>& f) {
    try {
      record(name, tol, f());
    } catch (const Error&) {
      auto& p = property(name, tol);
      ++p.samples;
      ++p.failures;
    }
  }

  void verdict(const std::string& name, bool agree) {
    auto& p = property(name, 0.0);
    ++p.samples;
    if (!agree) ++p.failures;
  }

 private:
  CheckReport& report_;
  std::string algebra_;
};

const std::vector<const Algebra*>& featured() {
  static const std::vector<const Algebra*> v = {&algebra_r4(), &algebra_r31(), &algebra_r301(),
                                                &algebra_r41()};
  return v;
}

std::vector<const Algebra*> with_r3() {
  auto v = featured();
  v.insert(v.begin(), &algebra_r3());
  return v;
}

double rel_diff(const Multivector& a, const Multivector& b) {
  return max_abs_diff(a, b) / std::max(1.0, b.max_abs());
}

// Rotation angles of both split factors lie in the principal range, so that
// log(exp(B)) should return B itself.
bool principal(const Multivector& b) {
  const BivectorSplit sp = invariant_split(b);
  if (sp.degenerate) return false;
  double sum = 0.0;
  for (double l : {sp.lambda_minus, sp.lambda_plus})
    if (l < 0.0) sum += std::sqrt(-l);
  return sum < std::numbers::pi - 0.05;
}

void suite_rotor(CheckReport& rep, Sampler& smp, long count) {
  for (const Algebra* alg : with_r3()) {
    Recorder r(rep, alg->name());
    const Signature& sig = alg->signature();
    for (long i = 0; i < count; ++i) {
      const Multivector x = smp.nonsingular_even(sig);
      r.guarded("rotor condition", 1e-9, [&] {
        return Rotor::condition_residual(normalize(x).rotor.value());
      });
      r.guarded("polar reconstruction", 1e-10, [&] {
        const PolarParts pp = normalize(x);
        return rel_diff(pp.scale.to_multivector() * pp.rotor.value(), x);
      });
      r.guarded("idempotence", 1e-12, [&] {
        const Multivector rr = normalize(x).rotor.value();
        return max_abs_diff(normalize(rr).rotor.value(), rr) / std::max(1.0, rr.max_abs());
      });
      r.guarded("inner product kept", 1e-9, [&] {
        const Multivector rr = normalize(x).rotor.value();
        const Multivector u = smp.vector(sig), v = smp.vector(sig);
        const double before = inner_dot(u, v).scalar_part();
        const double after = inner_dot(sandwich(rr, u), sandwich(rr, v)).scalar_part();
        const double scale = std::pow(rr.coeff_norm(), 4) * u.coeff_norm() * v.coeff_norm();
        return std::abs(after - before) / std::max(1.0, scale);
      });
    }
  }
}

void suite_roundtrip(CheckReport& rep, Sampler& smp, long count) {
  for (const Algebra* alg : with_r3()) {
    Recorder r(rep, alg->name());
    const Signature& sig = alg->signature();
    for (long i = 0; i < count; ++i) {
      const Multivector small = smp.bivector_in_ball(sig, 2.0);
      r.guarded("exp = series", 1e-10, [&] {
        return max_abs_diff(exp_bivector(small).value(), exp_series(small).value());
      });
      const Multivector b = smp.rotor_generator(sig);
      const Rotor rot = exp_bivector(b);
      r.guarded("exp(log R) = R", 1e-8, [&] {
        return rel_diff(exp_bivector(log_rotor(rot)).value(), rot.value());
      });
      if (principal(b))
        r.guarded("log(exp B) = B", 1e-8, [&] { return rel_diff(log_rotor(rot), b); });
      r.guarded("sqrt(R)^2 = R", 1e-9, [&] {
        const Multivector s = sqrt_rotor(rot).value();
        return rel_diff(s * s, rot.value());
      });
      r.guarded("R^1 = R", 1e-9, [&] { return rel_diff(rotor_power(rot, 1.0).value(), rot.value()); });
    }
  }
}

void suite_split(CheckReport& rep, Sampler& smp, long count) {
  for (const Algebra* alg : with_r3()) {
    Recorder r(rep, alg->name());
    const Signature& sig = alg->signature();
    for (long i = 0; i < count; ++i) {
      const Multivector b = smp.bivector(sig);
      r.guarded("sum", 1e-10, [&] {
        const BivectorSplit sp = invariant_split(b);
        return max_abs_diff(sp.b_plus + sp.b_minus, b);
      });
      r.guarded("commute", 1e-10, [&] {
        const BivectorSplit sp = invariant_split(b);
        return commutator(sp.b_plus, sp.b_minus).max_abs();
      });
      r.guarded("square is scalar", 1e-10, [&] {
        const BivectorSplit sp = invariant_split(b);
        double res = 0.0;
        for (const auto* f : {&sp.b_plus, &sp.b_minus}) {
          const Multivector sq = *f * *f;
          res = std::max(res, off_grade_residual(sq, {0}));
        }
        res = std::max(res, std::abs((sp.b_plus * sp.b_plus).scalar_part() - sp.lambda_plus));
        res = std::max(res, std::abs((sp.b_minus * sp.b_minus).scalar_part() - sp.lambda_minus));
        return res;
      });
      r.guarded("lambda order", 0.0, [&] {
        const BivectorSplit sp = invariant_split(b);
        return std::max(0.0, sp.lambda_minus - sp.lambda_plus);
      });
    }
  }
}

void suite_ortho4(CheckReport& rep, Sampler& smp, long count) {
  const Algebra& alg = algebra_r4();
  const Signature& sig = alg.signature();
  Recorder r(rep, alg.name());
  for (long i = 0; i < count; ++i) {
    const Multivector x = smp.even(sig);
    const Multivector u = smp.vector(sig);
    // v: random vector with its u component removed
    Multivector v = smp.vector(sig);
    v = v - u * (inner_dot(u, v).scalar_part() / inner_dot(u, u).scalar_part());
    const Multivector up = sandwich(x, u), vp = sandwich(x, v);
    const double scale = std::pow(x.coeff_norm(), 4) * u.coeff_norm() * v.coeff_norm();
    r.record("orthogonality kept", 1e-9, std::abs(inner_dot(up, vp).scalar_part()) / scale);
    // S^2 = X reverse(X); squared lengths scale by S^2 times its Study conjugate
    const StudyNumber s2 = study_from(x * reverse(x));
    const double factor = s2.scalar() * s2.scalar() - s2.quad_square();
    const double expect = factor * inner_dot(u, u).scalar_part();
    const double got = inner_dot(up, up).scalar_part();
    r.record("norm scaling", 1e-9, std::abs(got - expect) / std::max(std::abs(expect), 1e-300));
  }
}

template <class Alg>
double packed_rel(const EvenPacked<Alg>& fast, const EvenPacked<Alg>& generic) {
  double err = 0.0, scale = 0.0;
  for (std::size_t k = 0; k < fast.c.size(); ++k) {
    err = std::max(err, std::abs(fast.c[k] - generic.c[k]));
    scale = std::max(scale, std::abs(generic.c[k]));
  }
  return err / scale;
}

template <class Alg, class Fn>
void kernel_equivalence(CheckReport& rep, Sampler& smp, long count, Fn kernel, Fn sqrt_kernel,
                        const Multivector& singular_factor) {
  const Algebra& alg = Alg::algebra();
  const Signature& sig = alg.signature();
  Recorder r(rep, alg.name());
  for (long i = 0; i < count; ++i) {
    const Multivector x = smp.nonsingular_even(sig);
    r.guarded("normalize equivalence", 1e-12, [&] {
      const auto generic = pack_even<Alg>(normalize(x, NormBranch::magnitude).rotor.value());
      return packed_rel(kernel(pack_even<Alg>(x)), generic);
    });
    // rotor population: the sqrt kernel normalizes 1 + R
    const Rotor rot = exp_bivector(smp.rotor_generator(sig));
    r.guarded("sqrt squares back", 1e-9, [&] {
      const Multivector s = unpack(sqrt_kernel(pack_even<Alg>(rot.value())));
      return rel_diff(s * s, rot.value());
    });

    // verdicts on raw draws and on Study-singular products
    for (const Multivector& y : {smp.even(sig), singular_factor * smp.nonsingular_even(sig)}) {
      bool generic_ok = true, fast_ok = true, study_singular = false;
      try {
        normalize(y, NormBranch::magnitude);
      } catch (const Error& e) {
        generic_ok = false;
        study_singular = e.kind() == ErrorKind::singular;
      }
      try {
        kernel(pack_even<Alg>(y));
      } catch (const Error&) {
        fast_ok = false;
      }
      r.verdict("singularity verdicts", generic_ok == fast_ok);
      if (study_singular) r.verdict("singular inputs refused", !fast_ok);
    }
  }
}

void suite_kernels(CheckReport& rep, Sampler& smp, long count) {
  const Signature& s4 = algebra_r4().signature();
  const Signature& s31 = algebra_r31().signature();
  const Signature& s301 = algebra_r301().signature();
  const Signature& s41 = algebra_r41().signature();
  auto I = [](const Signature& sig) { return Multivector::blade(sig, Blade{0b1111}); };
  // Study-singular factors: X reverse(X) has zero Study norm
  kernel_equivalence<R4>(rep, smp, count, normalize_r4, sqrt_r4, 1.0 + I(s4));
  kernel_equivalence<R31>(rep, smp, count, normalize_r31, sqrt_r31,
                          1.0 + Multivector::blade(s31, Blade{0b1001}));
  kernel_equivalence<R301>(rep, smp, count, normalize_r301, sqrt_r301,
                           Multivector::blade(s301, Blade{0b0011}));
  kernel_equivalence<R41>(rep, smp, count, normalize_r41, sqrt_r41, 1.0 + I(s41));

  Recorder r(rep, algebra_r301().name());
  for (long i = 0; i < count; ++i) {
    const Multivector b = smp.rotor_generator(s301);
    const Rotor rot = exp_bivector(b);
    r.guarded("exp equivalence", 1e-12, [&] {
      return packed_rel(exp_r301(pack_bivector(b)), pack_even<R301>(rot.value()));
    });
    r.guarded("log round trip", 1e-10, [&] {
      const EvenPacked<R301> packed = pack_even<R301>(rot.value());
      return packed_rel(exp_r301(log_r301(packed)), packed);
    });
    r.guarded("log equivalence", 1e-10, [&] {
      const BivectorPacked fast = log_r301(pack_even<R301>(rot.value()));
      return max_abs_diff(unpack(fast), log_rotor(rot)) / std::max(1.0, b.max_abs());
    });
  }
}

}  // namespace

bool CheckReport::pass() const {
  for (const auto& p : properties)
    if (!p.pass()) return false;
  return true;
}

std::string CheckReport::format() const {
  std::string out = "check " + suite + " seed=" + std::to_string(seed) +
                    " count=" + std::to_string(count) + "\n";
  char line[256];
  for (const auto& p : properties) {
    std::snprintf(line, sizeof line, "  %-5s %-26s max %-10.3g tol %-8.3g n=%-6ld %s%s\n",
                  p.algebra.c_str(), p.property.c_str(), p.max_residual, p.tolerance, p.samples,
                  p.pass() ? "PASS" : "FAIL",
                  p.failures ? (" (" + std::to_string(p.failures) + " failures)").c_str() : "");
    out += line;
  }
  out += "rejected draws: " + std::to_string(rejected) + "\n";
  out += pass() ? "PASS\n" : "FAIL\n";
  return out;
}

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> v = {"rotor", "roundtrip", "split", "ortho4", "kernels"};
  return v;
}

CheckReport run_check(std::string_view suite, std::uint64_t seed, long count) {
  CheckReport rep;
  rep.suite = std::string(suite);
  rep.seed = seed;
  rep.count = count;
  Sampler smp(seed);
  if (suite == "rotor") suite_rotor(rep, smp, count);
  else if (suite == "roundtrip") suite_roundtrip(rep, smp, count);
  else if (suite == "split") suite_split(rep, smp, count);
  else if (suite == "ortho4") suite_ortho4(rep, smp, count);
  else if (suite == "kernels") suite_kernels(rep, smp, count);
  else throw Error(ErrorKind::invalid_argument, "unknown check suite '" + std::string(suite) + "'");
  rep.rejected = smp.rejected();
  return rep;
}

}  // namespace gak
