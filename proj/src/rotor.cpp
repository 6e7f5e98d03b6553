#include "gak/rotor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gak {

namespace {

double scale_of(const Multivector& x) { return std::max(1.0, x.max_abs()); }

void require_even(const Multivector& x, const char* what) {
  if (odd_part(x).max_abs() > kDefaultTol * scale_of(x))
    throw Error(ErrorKind::invalid_argument, std::string(what) + " needs an even element");
}

Multivector require_bivector(const Multivector& b, const char* what) {
  if (off_grade_residual(b, {2}) > kDefaultTol * scale_of(b))
    throw Error(ErrorKind::invalid_argument, std::string(what) + " needs a bivector");
  return grade_project(b, 2);
}

// cosh(sqrt(l)) and sinhc(sqrt(l)) for any real l: rotations (l < 0),
// translations (l = 0) and boosts (l > 0).
struct CoSi {
  double co;
  double si;
};

CoSi co_si(double lambda) {
  if (lambda < 0.0) {
    const double t = std::sqrt(-lambda);
    return {std::cos(t), t == 0.0 ? 1.0 : std::sin(t) / t};
  }
  if (lambda > 0.0) {
    const double t = std::sqrt(lambda);
    return {std::cosh(t), std::sinh(t) / t};
  }
  return {1.0, 1.0};
}

Multivector exp_simple_unchecked(const Multivector& b, double lambda) {
  const CoSi cs = co_si(lambda);
  return cs.si * b + cs.co;
}

// Euclidean coefficient dot product.
double coeff_dot(const Multivector& a, const Multivector& b) {
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) s += a.coeff(i) * b.coeff(i);
  return s;
}

enum class FactorKind { rotation, boost, null };

struct Factor {
  double co;         // scalar part of the simple rotor
  double x;          // coefficient along dir
  Multivector dir;   // bivector direction
  double dir_sq;     // dir^2 (a scalar)
  FactorKind kind;
};

FactorKind kind_of(double dir_sq, const Multivector& dir) {
  const double n2 = dir.coeff_norm() * dir.coeff_norm();
  if (std::abs(dir_sq) <= 1e-12 * n2) return FactorKind::null;
  return dir_sq < 0.0 ? FactorKind::rotation : FactorKind::boost;
}

// Rotation angle of co + x dir, in [0, pi].
double rotation_angle(const Factor& f) {
  return std::atan2(std::abs(f.x) * std::sqrt(-f.dir_sq), f.co);
}

Multivector log_factor(const Factor& f) {
  const Multivector s = f.x * f.dir;
  switch (f.kind) {
    case FactorKind::rotation: {
      const double sin_part = std::abs(f.x) * std::sqrt(-f.dir_sq);
      if (sin_part == 0.0) {
        if (f.co > 0.0) return Multivector(f.dir.signature());
        throw Error(ErrorKind::branch_point, "rotation by pi with no defined plane");
      }
      return (std::atan2(sin_part, f.co) / sin_part) * s;
    }
    case FactorKind::boost: {
      if (!(f.co > 0.0))
        throw Error(ErrorKind::branch_point, "negated boost is not in the image of exp");
      const double root = std::sqrt(f.dir_sq);
      const double sh = f.x * root;
      return (sh == 0.0 ? 1.0 : std::asinh(sh) / sh) * s;
    }
    case FactorKind::null:
      if (!(f.co > 0.0))
        throw Error(ErrorKind::branch_point, "negated translation is not in the image of exp");
      return s / f.co;
  }
  return s;
}

Factor make_factor(double co, double x, Multivector dir) {
  const double sq = (dir * dir).scalar_part();
  const FactorKind kind = kind_of(sq, dir);
  return Factor{co, x, std::move(dir), sq, kind};
}

}  // namespace

Rotor::Rotor(Multivector value, double tol) : value_(std::move(value)) {
  require_even(value_, "rotor");
  const double scale = scale_of(value_);
  if (condition_residual(value_) > tol * scale * scale)
    throw Error(ErrorKind::invalid_argument, "element does not satisfy R reverse(R) = 1");
}

Rotor Rotor::identity(const Signature& sig) { return Rotor(Multivector::scalar(sig, 1.0)); }

double Rotor::condition_residual(const Multivector& r) {
  return ((r * reverse(r)) - 1.0).max_abs();
}

Rotor make_rotor_unchecked(Multivector value) {
  return Rotor(std::move(value), Rotor::unchecked_t{});
}

double polar_scale(const Multivector& x) {
  const double n = x.coeff_norm();
  return n * n;
}

PolarParts normalize(const Multivector& x, NormBranch branch) {
  require_even(x, "normalize");
  const Multivector xe = even_part(x);
  const StudyNumber sq = study_from(xe * reverse(xe));

  if (study_is_singular(sq, polar_scale(xe)))
    throw Error(ErrorKind::singular, "X reverse(X) is singular: no unambiguous nearest rotor");
  if (branch == NormBranch::magnitude && study_sqrt_branch(sq) == StudyBranch::negative_real) {
    const double s = std::sqrt(-sq.scalar());
    return PolarParts{StudyNumber::real(x.signature(), s), make_rotor_unchecked(xe / s),
                      StudyBranch::principal, true};
  }
  const StudyNumber inv = study_inv_sqrt(sq);
  return PolarParts{study_sqrt(sq), make_rotor_unchecked(even_part(inv.to_multivector() * xe)),
                    study_sqrt_branch(sq), false};
}

Rotor sqrt_rotor(const Rotor& r) {
  try {
    return normalize(r.value() + 1.0).rotor;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::singular)
      throw Error(ErrorKind::singular, "rotor has no principal square root");
    throw;
  }
}

BivectorSplit invariant_split(const Multivector& b_in) {
  const Multivector b = require_bivector(b_in, "invariant_split");
  const Signature& sig = b.signature();
  const StudyNumber sq = study_from(b * b);
  const double a = sq.scalar();
  const double q2 = sq.quad_square();
  const double scale = std::abs(a) + sq.quad_magnitude();
  const double bn = b.coeff_norm();

  // null simple bivector, e.g. a translation generator
  if (scale <= 1e-15 * bn * bn || scale == 0.0)
    return BivectorSplit{b, Multivector(sig), 0.0, 0.0, false};

  const double rad = a * a - q2;
  if (rad < 0.0 && -rad > (kSplitDegenerateEps * scale) * (kSplitDegenerateEps * scale))
    throw Error(ErrorKind::complex_solution,
                "invariant decomposition has complex solutions for this bivector");
  const double n = std::sqrt(std::max(rad, 0.0));
  if (n <= kSplitDegenerateEps * scale)
    return BivectorSplit{b, Multivector(sig), 0.5 * a, 0.5 * a, true};

  // b+ = P+ B with P+ = (1 + conj(B^2) / |B^2|) / 2
  const Multivector conj = study_conj(sq).to_multivector();
  const Multivector b_plus = grade_project(0.5 * (b + (conj * b) / n), 2);
  const Multivector b_minus = b - b_plus;

  // lambda+ lambda- = (bI)^2 / 4; take the root without cancellation first
  double lp, lm;
  if (a >= 0.0) {
    lp = 0.5 * (a + n);
    lm = q2 / (4.0 * lp);
  } else {
    lm = 0.5 * (a - n);
    lp = q2 / (4.0 * lm);
  }
  return BivectorSplit{b_plus, b_minus, lp, lm, false};
}

Rotor exp_simple(const Multivector& b_in, double tol) {
  const Multivector b = require_bivector(b_in, "exp_simple");
  const Multivector sq = b * b;
  if (off_grade_residual(sq, {0}) > tol * scale_of(sq))
    throw Error(ErrorKind::invalid_argument, "exp_simple needs a simple bivector");
  return make_rotor_unchecked(exp_simple_unchecked(b, sq.scalar_part()));
}

Rotor exp_bivector(const Multivector& b_in) {
  const BivectorSplit split = invariant_split(b_in);
  if (split.degenerate) return exp_series(b_in);
  return make_rotor_unchecked(exp_simple_unchecked(split.b_plus, split.lambda_plus) *
                              exp_simple_unchecked(split.b_minus, split.lambda_minus));
}

Rotor exp_series(const Multivector& b_in, double tol, int max_terms) {
  const Multivector b = require_bivector(b_in, "exp_series");
  Multivector term = Multivector::scalar(b.signature(), 1.0);
  Multivector sum = term;
  for (int j = 1; j < max_terms; ++j) {
    term = (term * b) / double(j);
    sum = sum + term;
    if (term.max_abs() < tol) return make_rotor_unchecked(sum);
  }
  throw Error(ErrorKind::not_converged, "exponential series did not converge");
}

Multivector log_rotor(const Rotor& rotor) {
  const Multivector& r = rotor.value();
  const Signature& sig = r.signature();
  const double eps = 1e-12 * scale_of(r);
  const double r0 = r.scalar_part();
  const Multivector w = grade_project(r, 2);
  const Multivector q = sig.dim() >= 4 ? grade_project(r, 4) : Multivector(sig);

  if (w.max_abs() <= eps) {
    if (q.max_abs() > eps)
      throw Error(ErrorKind::non_unique, "logarithm of a scalar plus quadvector rotor is not unique");
    if (r0 > 0.0) return Multivector(sig);
    throw Error(ErrorKind::branch_point, "logarithm of -1 is not defined");
  }

  const BivectorSplit split = invariant_split(w);
  if (split.degenerate)
    throw Error(ErrorKind::non_unique, "isoclinic rotor: logarithm is not unique");

  // dominant component first
  const bool plus_first = split.b_plus.coeff_norm() >= split.b_minus.coeff_norm();
  const Multivector& w1 = plus_first ? split.b_plus : split.b_minus;
  const Multivector& w2 = plus_first ? split.b_minus : split.b_plus;
  const double mu1 = plus_first ? split.lambda_plus : split.lambda_minus;

  // The second direction shows up in <R>_2 scaled by co of the first factor,
  // and in <R>_4 = s1 s2. Use whichever carries it with more weight.
  Multivector d2 = w2;
  if (q.max_abs() > eps && std::abs(mu1) > 1e-12 * w1.coeff_norm() * w1.coeff_norm()) {
    const Multivector from_quad = grade_project(w1 * q, 2) / mu1;
    if (from_quad.coeff_norm() > d2.coeff_norm()) d2 = from_quad;
  }

  if (d2.max_abs() <= eps) {
    // single simple factor: R = co + w1
    return log_factor(make_factor(r0, 1.0, w1));
  }

  // R = (c1 + x1 d1)(c2 + x2 d2) with d1 = w1; the coefficient matrix
  // [[c1 c2, c1 x2], [x1 c2, x1 x2]] has rank one.
  const Multivector& d1 = w1;
  const Multivector d12 = d1 * d2;
  const double a1 = 1.0;
  const double a2 = coeff_dot(w2, d2) / coeff_dot(d2, d2);
  const double d12n = coeff_dot(d12, d12);
  const double a12 = d12n > 0.0 ? coeff_dot(q, d12) / d12n : 0.0;
  const double m[2][2] = {{r0, a2}, {a1, a12}};

  const double nu1 = (d1 * d1).scalar_part();
  const double nu2 = (d2 * d2).scalar_part();
  auto q1 = [&](double c, double x) { return c * c - nu1 * x * x; };
  auto q2 = [&](double c, double x) { return c * c - nu2 * x * x; };

  const int j = q1(m[0][0], m[1][0]) >= q1(m[0][1], m[1][1]) ? 0 : 1;
  const int i = q2(m[0][0], m[0][1]) >= q2(m[1][0], m[1][1]) ? 0 : 1;
  const double nj = std::sqrt(std::max(q1(m[0][j], m[1][j]), 0.0));
  const double ni = std::sqrt(std::max(q2(m[i][0], m[i][1]), 0.0));
  if (nj == 0.0 || ni == 0.0)
    throw Error(ErrorKind::non_unique, "rotor does not factor into commuting simple rotors");
  double u[2] = {m[0][j] / nj, m[1][j] / nj};
  double v[2] = {m[i][0] / ni, m[i][1] / ni};
  double agree = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) agree += m[a][b] * u[a] * v[b];
  if (agree < 0.0) v[0] = -v[0], v[1] = -v[1];

  Factor f1 = make_factor(u[0], u[1], d1);
  Factor f2 = make_factor(v[0], v[1], d2);
  auto flip = [](Factor& f) { f.co = -f.co, f.x = -f.x; };

  // R = (-R1)(-R2): a boost or translation factor fixes the overall sign,
  // two rotations take the pair with the smaller total angle.
  const bool rot1 = f1.kind == FactorKind::rotation;
  const bool rot2 = f2.kind == FactorKind::rotation;
  if (!rot1 && !rot2) {
    if ((f1.co > 0.0) != (f2.co > 0.0))
      throw Error(ErrorKind::branch_point, "rotor is not in the image of exp");
    if (f1.co < 0.0) flip(f1), flip(f2);
  } else if (!rot1) {
    if (f1.co < 0.0) flip(f1), flip(f2);
  } else if (!rot2) {
    if (f2.co < 0.0) flip(f1), flip(f2);
  } else if (rotation_angle(f1) + rotation_angle(f2) > std::numbers::pi) {
    flip(f1), flip(f2);
  }
  return log_factor(f1) + log_factor(f2);
}

Rotor rotor_power(const Rotor& r, double t) {
  return exp_bivector(t * log_rotor(r));
}

Trireflection decompose_trireflection(const Multivector& p, std::optional<Multivector> probe) {
  const double scale = scale_of(p);
  if (even_part(p).max_abs() > kDefaultTol * scale)
    throw Error(ErrorKind::invalid_argument, "trireflection decomposition needs an odd element");
  const Multivector po = odd_part(p);
  if (study_is_singular(study_from(po * reverse(po)), polar_scale(po)))
    throw Error(ErrorKind::singular, "P reverse(P) is singular");

  const Multivector v = grade_project(po, 1);
  if (v.max_abs() > 1e-12 * scale) {
    const double v2 = (v * v).scalar_part();
    if (std::abs(v2) > 1e-12 * v.coeff_norm() * v.coeff_norm()) {
      const Multivector r = v / std::sqrt(std::abs(v2));
      return Trireflection{r, inverse(r) * po};
    }
  }

  std::vector<Multivector> probes;
  if (probe) {
    if (!(probe->signature() == p.signature()))
      throw Error(ErrorKind::signature_mismatch, "probe signature differs from P");
    probes.push_back(grade_project(*probe, 1));
  } else {
    for (int i = 0; i < p.dim(); ++i) probes.push_back(Multivector::basis_vector(p.signature(), i));
  }
  for (const Multivector& x : probes) {
    const Multivector xp = inner_dot(x, po);
    if (xp.max_abs() <= 1e-12 * scale) continue;
    try {
      const Multivector big_r = normalize(xp).rotor.value();
      return Trireflection{po * inverse(big_r), big_r};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::singular) throw;
    }
  }
  throw Error(ErrorKind::invalid_argument,
              "probe . P vanishes or cannot be normalized; choose a different probe");
}

}  // namespace gak
