#include "gak/kernels.hpp"

#include "gak/detail/kernels_impl.hpp"

namespace gak {

BivectorPacked pack_bivector(const Multivector& b) {
  const Algebra& alg = algebra_r301();
  const auto v = alg.pack(b, alg.bivector_layout());
  BivectorPacked out;
  std::copy(v.begin(), v.end(), out.c.begin());
  return out;
}

Multivector unpack(const BivectorPacked& b) {
  const Algebra& alg = algebra_r301();
  return alg.unpack(b.c, alg.bivector_layout());
}

EvenPacked<R31> normalize_r31(const EvenPacked<R31>& x) { return {detail::normalize_r31(x.c)}; }
EvenPacked<R301> normalize_r301(const EvenPacked<R301>& x) { return {detail::normalize_r301(x.c)}; }
EvenPacked<R4> normalize_r4(const EvenPacked<R4>& x) { return {detail::normalize_r4(x.c)}; }
EvenPacked<R41> normalize_r41(const EvenPacked<R41>& x) { return {detail::normalize_r41(x.c)}; }

namespace {
template <class Alg>
EvenPacked<Alg> one_plus(EvenPacked<Alg> r) {
  r.c[0] += 1.0;
  return r;
}

template <class F, class Arg>
auto as_sqrt(F f, const Arg& x) {
  try {
    return f(x);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::singular)
      throw Error(ErrorKind::singular, "rotor has no principal square root");
    throw;
  }
}
}  // namespace

EvenPacked<R31> sqrt_r31(const EvenPacked<R31>& r) { return as_sqrt(normalize_r31, one_plus(r)); }
EvenPacked<R301> sqrt_r301(const EvenPacked<R301>& r) { return as_sqrt(normalize_r301, one_plus(r)); }
EvenPacked<R4> sqrt_r4(const EvenPacked<R4>& r) { return as_sqrt(normalize_r4, one_plus(r)); }
EvenPacked<R41> sqrt_r41(const EvenPacked<R41>& r) { return as_sqrt(normalize_r41, one_plus(r)); }

BivectorPacked log_r301(const EvenPacked<R301>& r) { return {detail::log_r301(r.c)}; }
EvenPacked<R301> exp_r301(const BivectorPacked& b) { return {detail::exp_r301(b.c)}; }

}  // namespace gak
