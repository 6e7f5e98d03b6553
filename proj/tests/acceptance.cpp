// Acceptance run: one PASS/FAIL line per criterion, seed 1 throughout.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "gak/algebra.hpp"
#include "gak/bench.hpp"
#include "gak/checks.hpp"
#include "gak/kernels.hpp"
#include "gak/rotor.hpp"
#include "gak/sampling.hpp"
#include "oracle.hpp"

using namespace gak;
using std::numbers::pi;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Tally {
  double worst = 0.0;
  long samples = 0;
  long failures = 0;

  void add(double r) {
    ++samples;
    if (!(r <= worst)) worst = r;
  }
  void expect(bool ok) {
    ++samples;
    if (!ok) ++failures;
  }
  // Runs f; an exception counts as a failure.
  void guarded(const std::function<double()>& f) {
    try {
      add(f());
    } catch (const Error&) {
      ++samples;
      ++failures;
    }
  }
  bool within(double tol) const { return failures == 0 && worst <= tol; }
};

int failed = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failed;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Multivector blade(const Algebra& alg, const char* label, double c = 1.0) {
  auto [b, s] = alg.parse_label(label);
  return Multivector::blade(alg.signature(), b, s * c);
}

double rel_diff(const Multivector& a, const Multivector& b) {
  return max_abs_diff(a, b) / std::max(1.0, b.max_abs());
}

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

void criterion1() {
  Sampler smp(kSeed);
  std::string detail;
  bool ok = true;
  const auto t0 = std::chrono::steady_clock::now();
  for (const Algebra* alg : featured()) {
    Tally t;
    for (int i = 0; i < 10000; ++i) {
      const Multivector x = smp.nonsingular_even(alg->signature());
      t.guarded([&] { return Rotor::condition_residual(normalize(x).rotor.value()); });
    }
    ok = ok && t.within(1e-9);
    detail += fmt("%s %.2e  ", alg->name().c_str(), t.worst + t.failures);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok = ok && secs < 10.0;
  report(1, ok, detail + fmt("(tol 1e-9, 4 x 10^4 inputs in %.2f s, limit 10 s)", secs));
}

void criterion2() {
  const CheckReport rep = run_check("kernels", kSeed, 10000);
  bool ok = rep.pass();
  double worst_norm = 0.0;
  long verdicts = 0, verdict_fail = 0;
  std::string bad;
  for (const PropertyResult& p : rep.properties) {
    if (p.property == "normalize equivalence") worst_norm = std::max(worst_norm, p.max_residual);
    if (p.property == "singularity verdicts" || p.property == "singular inputs refused") {
      verdicts += p.samples;
      verdict_fail += p.failures;
    }
    if (!p.pass()) bad += " " + p.algebra + "/" + p.property;
  }
  // normalize equivalence is the relative 1e-12 gate
  ok = ok && worst_norm <= 1e-12;
  report(2, ok,
         fmt("normalize max rel %.2e (tol 1e-12), %ld verdicts, %ld disagree, 10^4 per algebra",
             worst_norm, verdicts, verdict_fail) +
             (bad.empty() ? "" : "; failing:" + bad));
}

// Isoclinic R4 bivector: a combination of the self-dual blades.
Multivector isoclinic_r4(Sampler& smp) {
  const Algebra& r4 = algebra_r4();
  const double a = smp.uniform(), b = smp.uniform(), c = smp.uniform();
  Multivector x = blade(r4, "e12", a) + blade(r4, "e34", a) + blade(r4, "e13", b) +
                  blade(r4, "e42", b) + blade(r4, "e14", c) + blade(r4, "e23", c);
  const double n = x.coeff_norm();
  return n > 0.0 ? x * (smp.uniform(0.0, 2.0) / n) : x;
}

void criterion3() {
  Sampler smp(kSeed);
  Tally vs_series, vs_oracle, iso;
  long degenerate = 0;
  for (const Algebra* alg : with_r3()) {
    for (int i = 0; i < 1000; ++i) {
      const Multivector b = smp.bivector_in_ball(alg->signature(), 2.0);
      vs_series.guarded([&] { return max_abs_diff(exp_bivector(b).value(), exp_series(b).value()); });
      vs_oracle.guarded([&] { return max_abs_diff(exp_bivector(b).value(), oracle::exp_series(b)); });
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const Multivector b = isoclinic_r4(smp);
    if (invariant_split(b).degenerate) ++degenerate;
    iso.guarded([&] { return max_abs_diff(exp_bivector(b).value(), oracle::exp_series(b)); });
  }
  const bool ok = vs_series.within(1e-10) && vs_oracle.within(1e-10) && iso.within(1e-10) &&
                  degenerate == 1000;
  report(3, ok,
         fmt("vs exp_series %.2e, vs independent series %.2e, %ld isoclinic R4 (%ld flagged) %.2e "
             "(tol 1e-10)",
             vs_series.worst, vs_oracle.worst, iso.samples, degenerate, iso.worst));
}

// Both split factors are rotations whose angles sum below pi, or boosts and
// translations, so that log(exp(B)) should give B back.
bool principal(const Multivector& b) {
  const BivectorSplit sp = invariant_split(b);
  if (sp.degenerate) return false;
  double sum = 0.0;
  for (double l : {sp.lambda_minus, sp.lambda_plus})
    if (l < 0.0) sum += std::sqrt(-l);
  return sum < pi - 0.05;
}

void criterion4() {
  Sampler smp(kSeed);
  Tally exp_log, log_exp;
  for (const Algebra* alg : with_r3()) {
    for (int i = 0; i < 1000; ++i) {
      const Multivector b = smp.rotor_generator(alg->signature());
      const Rotor r = exp_bivector(b);
      exp_log.guarded([&] { return rel_diff(exp_bivector(log_rotor(r)).value(), r.value()); });
      if (principal(b)) log_exp.guarded([&] { return rel_diff(log_rotor(r), b); });
    }
  }
  report(4, exp_log.within(1e-8) && log_exp.within(1e-8),
         fmt("exp(log R) %.2e over %ld, log(exp B) %.2e over %ld principal (tol 1e-8)", exp_log.worst,
             exp_log.samples, log_exp.worst, log_exp.samples));
}

void criterion5() {
  Sampler smp(kSeed);
  Tally sq;
  for (const Algebra* alg : with_r3()) {
    for (int i = 0; i < 1000; ++i) {
      const Rotor r = exp_bivector(smp.rotor_generator(alg->signature()));
      sq.guarded([&] {
        const Multivector s = sqrt_rotor(r).value();
        return rel_diff(s * s, r.value());
      });
    }
  }
  bool exact = true;
  for (const Algebra* alg : with_r3()) {
    const Rotor one = Rotor::identity(alg->signature());
    exact = exact && max_abs_diff(sqrt_rotor(one).value(), one.value()) == 0.0;
  }
  exact = exact && sqrt_r31(identity<R31>()) == identity<R31>() &&
          sqrt_r301(identity<R301>()) == identity<R301>() &&
          sqrt_r4(identity<R4>()) == identity<R4>() && sqrt_r41(identity<R41>()) == identity<R41>();
  const Algebra& pga = algebra_r301();
  const Multivector quarter = blade(pga, "e12");
  const Multivector half = (Multivector::scalar(pga.signature(), 1.0) + quarter) / std::sqrt(2.0);
  const double q_generic = max_abs_diff(sqrt_rotor(Rotor(quarter)).value(), half);
  const double q_fast = max_abs_diff(unpack(sqrt_r301(pack_even<R301>(quarter))), half);
  const bool ok = sq.within(1e-9) && exact && q_generic <= 1e-14 && q_fast <= 1e-14;
  report(5, ok,
         fmt("sqrt(R)^2 %.2e over %ld (tol 1e-9), sqrt(1) exact %s, quarter turn %.2e / %.2e (tol 1e-14)",
             sq.worst, sq.samples, exact ? "yes" : "no", q_generic, q_fast));
}

void criterion6() {
  Sampler smp(kSeed);
  struct Case {
    const Algebra* alg;
    StudyClass cls;
  };
  const Case cases[] = {{&algebra_r31(), StudyClass::complex_like},
                        {&algebra_r4(), StudyClass::split_like},
                        {&algebra_r301(), StudyClass::dual_like}};
  Tally root, inv, vs_oracle;
  for (const Case& c : cases) {
    for (int i = 0; i < 10000; ++i) {
      const StudyNumber s = smp.study(c.alg->signature(), c.cls);
      const Multivector sm = s.to_multivector();
      const double scale = std::max(1.0, sm.max_abs());
      root.guarded([&] {
        const Multivector r = study_sqrt(s).to_multivector();
        return max_abs_diff(r * r, sm) / scale;
      });
      inv.guarded([&] {
        const Multivector h = study_inv_sqrt(s).to_multivector();
        return max_abs_diff(h * h * sm, Multivector::scalar(sm.signature(), 1.0));
      });
      vs_oracle.guarded([&] {
        const Multivector q = s.quad();
        const double qn = q.coeff_norm();
        const double isq = qn > 0.0 ? (q * q).scalar_part() / (qn * qn) : 0.0;
        const auto [a, b] = oracle::study_sqrt(s.scalar(), qn, int(std::lround(isq)));
        const Multivector expect =
            Multivector::scalar(sm.signature(), a) + (qn > 0.0 ? q * (b / qn) : Multivector(sm.signature()));
        return max_abs_diff(study_sqrt(s).to_multivector(), expect) / std::max(1.0, expect.max_abs());
      });
    }
  }
  // light cone: a = +-|b| with I^2 = +1
  long refused = 0, tried = 0;
  for (const Algebra* alg : {&algebra_r4(), &algebra_r41()}) {
    for (double a : {1.0, 0.3, 7.5}) {
      for (double sgn : {1.0, -1.0}) {
        const StudyNumber s(a, blade(*alg, "e1234", sgn * a));
        for (const auto& op : std::vector<std::function<void()>>{
                 [&] { study_sqrt(s); }, [&] { study_inv_sqrt(s); }, [&] { study_inverse(s); }}) {
          ++tried;
          try {
            op();
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::singular) ++refused;
          }
        }
        ++tried;
        if (study_is_singular(s)) ++refused;
      }
    }
  }
  const bool ok = root.within(1e-11) && inv.within(1e-11) && vs_oracle.within(1e-11) && refused == tried;
  report(6, ok,
         fmt("(sqrt S)^2 %.2e, S^-1/2 S^-1/2 S %.2e, vs complex/split/dual oracle %.2e over %ld (tol "
             "1e-11); light cone refused %ld/%ld",
             root.worst, inv.worst, vs_oracle.worst, root.samples, refused, tried));
}

void criterion7() {
  Sampler smp(kSeed);
  Tally t;
  for (const Algebra* alg : with_r3()) {
    for (int i = 0; i < 10000; ++i) {
      const Multivector b = smp.bivector(alg->signature());
      t.guarded([&] {
        const BivectorSplit sp = invariant_split(b);
        double res = max_abs_diff(sp.b_plus + sp.b_minus, b);
        res = std::max(res, commutator(sp.b_plus, sp.b_minus).max_abs());
        for (const auto* f : {&sp.b_plus, &sp.b_minus})
          res = std::max(res, off_grade_residual(*f * *f, {0}));
        return res;
      });
    }
  }
  const Algebra& r4 = algebra_r4();
  const BivectorSplit w = invariant_split(blade(r4, "e12", 2.0) + blade(r4, "e34"));
  const double worked = std::max(max_abs_diff(w.b_plus, blade(r4, "e34")),
                                 max_abs_diff(w.b_minus, blade(r4, "e12", 2.0)));
  report(7, t.within(1e-10) && worked <= 1e-14,
         fmt("sum/commute/square residue %.2e over %ld (tol 1e-10), split(2e12+e34) off by %.2e (tol "
             "1e-14)",
             t.worst, t.samples, worked));
}

void criterion8() {
  struct Want {
    const char* op;
    const char* text;
  };
  const Want wants[] = {{"normalize", "23 mul, 10 add, 1 sqrt, 1 div"},
                        {"log", "14 mul, 5 add, 1 div, 1 acos, 1 sqrt"},
                        {"exp", "17 mul, 8 add, 2 div, 1 sincos, 1 sqrt"}};
  bool ok = true;
  std::string detail;
  for (const Want& w : wants) {
    const std::string got = format_op_counts(count_kernel_ops(w.op, "r301"), op_count_order(w.op));
    ok = ok && got == w.text;
    detail += std::string(w.op) + ": " + got + "; ";
  }
  report(8, ok, "r301 " + detail);
}

void criterion9() {
  bool rot = true;
  for (const Algebra* alg : with_r3()) {
    for (double th : {0.3, -2.0, 7.0}) {
      const Multivector r = normalize(blade(*alg, "e12", th)).rotor.value();
      rot = rot && max_abs_diff(r, blade(*alg, "e12", th > 0 ? 1.0 : -1.0)) <= 1e-15;
    }
  }
  const Algebra& pga = algebra_r301();
  long null_refused = 0;
  for (double th : {0.5, -3.0}) {
    try {
      normalize(blade(pga, "e01", th));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::singular) ++null_refused;
    }
    try {
      normalize_r301(pack_even<R301>(blade(pga, "e01", th)));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::singular) ++null_refused;
    }
  }
  const Algebra& sta = algebra_r31();
  Sampler smp(kSeed);
  Tally action;
  for (double th : {0.4, -1.7}) {
    const Multivector x = blade(sta, "e14", th);
    const Multivector r = normalize(x, NormBranch::magnitude).rotor.value();
    for (int i = 0; i < 100; ++i) {
      const Multivector u = smp.vector(sta.signature());
      action.add(max_abs_diff(conjugate(r, u), conjugate(x, u)));
    }
  }
  const bool ok = rot && null_refused == 4 && action.within(1e-10);
  report(9, ok,
         fmt("theta e12 -> sign(theta) e12 %s, null generator refused %ld/4, boost generator action %.2e "
             "over %ld vectors (tol 1e-10)",
             rot ? "yes" : "no", null_refused, action.worst, action.samples));
}

void criterion10() {
  Sampler smp(kSeed);
  const Algebra& r4 = algebra_r4();
  const Signature& sig = r4.signature();
  Tally ortho, scaling;
  double literal = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Multivector x = smp.even(sig);
    const Multivector u = smp.vector(sig);
    Multivector v = smp.vector(sig);
    v = v - u * (inner_dot(u, v).scalar_part() / inner_dot(u, u).scalar_part());
    const Multivector up = sandwich(x, u), vp = sandwich(x, v);
    const double scale = std::pow(x.coeff_norm(), 4) * u.coeff_norm() * v.coeff_norm();
    ortho.add(std::abs(inner_dot(up, vp).scalar_part()) / scale);
    // S^2 = X reverse(X); S^2 times its Study conjugate is a scalar
    const StudyNumber s2 = study_from(x * reverse(x));
    const double conj_product = (s2.to_multivector() * study_conj(s2).to_multivector()).scalar_part();
    const double uu = inner_dot(u, u).scalar_part(), got = inner_dot(up, up).scalar_part();
    scaling.add(std::abs(got - conj_product * uu) / std::abs(conj_product * uu));
    const double norm = study_norm(s2);
    literal = std::max(literal, std::abs(got - norm * uu) / std::abs(norm * uu));
  }
  report(10, ortho.within(1e-9) && scaling.within(1e-9),
         fmt("|u'.v'|/scale %.2e, u'.u' vs S^2 conj(S^2) (u.u) %.2e rel (tol 1e-9) over 10^3; "
             "with the unsquared norm ||S^2|| the rel deviation would be %.2e",
             ortho.worst, scaling.worst, literal));
}

}  // namespace

int main() {
  const std::function<void()> all[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int n = 0;
  for (const auto& c : all) {
    ++n;
    try {
      c();
    } catch (const std::exception& e) {
      report(n, false, std::string("unexpected error: ") + e.what());
    }
  }
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
