#include "gak/bench.hpp"

#include <chrono>
#include <functional>

#include "gak/detail/kernels_impl.hpp"
#include "gak/kernels.hpp"
#include "gak/rotor.hpp"
#include "gak/sampling.hpp"

namespace gak {

OpCounts& op_counts() {
  thread_local OpCounts counts;
  return counts;
}

void reset_op_counts() { op_counts() = OpCounts{}; }

std::string format_op_counts(const OpCounts& c, const std::vector<std::string>& order) {
  std::string out;
  for (const auto& name : order) {
    long v = 0;
    if (name == "mul") v = c.mul;
    else if (name == "add") v = c.add;
    else if (name == "div") v = c.div;
    else if (name == "sqrt") v = c.sqrt;
    else if (name == "acos") v = c.acos;
    else if (name == "sincos") v = c.sincos;
    if (v == 0) continue;
    if (!out.empty()) out += ", ";
    out += std::to_string(v) + " " + name;
  }
  return out;
}

namespace {

Error unsupported(std::string_view op, std::string_view algebra) {
  return Error(ErrorKind::invalid_argument, "no fast kernel for " + std::string(op) + " on " +
                                                std::string(algebra));
}

const Algebra& kernel_algebra(std::string_view algebra) {
  if (algebra == "r31") return algebra_r31();
  if (algebra == "r301") return algebra_r301();
  if (algebra == "r4") return algebra_r4();
  if (algebra == "r41") return algebra_r41();
  throw Error(ErrorKind::invalid_argument, "no fast kernels for algebra '" + std::string(algebra) + "'");
}

template <class T, std::size_t N>
std::array<T, N> to_array(const std::vector<double>& v) {
  std::array<T, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = T(v[i]);
  return out;
}

template <class T, std::size_t N>
void run_normalize(std::string_view algebra, const std::vector<double>& x) {
  if constexpr (N == 8) {
    const auto a = to_array<T, 8>(x);
    if (algebra == "r31") detail::normalize_r31(a);
    else if (algebra == "r301") detail::normalize_r301(a);
    else detail::normalize_r4(a);
  } else {
    detail::normalize_r41(to_array<T, 16>(x));
  }
}

double elapsed_ns(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - t0).count();
}

volatile double g_sink;

}  // namespace

std::vector<std::string> op_count_order(std::string_view op) {
  if (op == "log") return {"mul", "add", "div", "acos", "sqrt"};
  if (op == "exp") return {"mul", "add", "div", "sincos", "sqrt"};
  return {"mul", "add", "sqrt", "div"};
}

OpCounts count_kernel_ops(std::string_view op, std::string_view algebra) {
  const Algebra& alg = kernel_algebra(algebra);
  const Signature& sig = alg.signature();
  Sampler smp(1);
  reset_op_counts();
  if (op == "normalize" || op == "sqrt") {
    Multivector x = op == "normalize" ? smp.nonsingular_even(sig)
                                      : exp_bivector(smp.rotor_generator(sig)).value() + 1.0;
    const auto packed = alg.pack(x, alg.even_layout());
    reset_op_counts();
    if (packed.size() == 8) run_normalize<Counted, 8>(algebra, packed);
    else run_normalize<Counted, 16>(algebra, packed);
    // the sqrt kernels add one to the scalar slot first
    if (op == "sqrt") ++op_counts().add;
  } else if (op == "log" && algebra == "r301") {
    const auto r = alg.pack(exp_bivector(smp.rotor_generator(sig)).value(), alg.even_layout());
    reset_op_counts();
    detail::log_r301(to_array<Counted, 8>(r));
  } else if (op == "exp" && algebra == "r301") {
    const auto b = alg.pack(smp.rotor_generator(sig), alg.bivector_layout());
    reset_op_counts();
    detail::exp_r301(to_array<Counted, 6>(b));
  } else {
    throw unsupported(op, algebra);
  }
  return op_counts();
}

BenchResult run_bench(std::string_view op, std::string_view algebra, long iterations,
                      std::uint64_t seed) {
  const Algebra& alg = kernel_algebra(algebra);
  const Signature& sig = alg.signature();
  const bool pga = algebra == "r301";
  if ((op == "log" || op == "exp") && !pga) throw unsupported(op, algebra);
  if (op != "normalize" && op != "sqrt" && op != "log" && op != "exp") throw unsupported(op, algebra);

  constexpr int kPool = 256;
  Sampler smp(seed);
  std::vector<Multivector> inputs;
  for (int i = 0; i < kPool; ++i) {
    if (op == "normalize") inputs.push_back(smp.nonsingular_even(sig));
    else if (op == "exp") inputs.push_back(smp.rotor_generator(sig));
    else inputs.push_back(exp_bivector(smp.rotor_generator(sig)).value());
  }
  std::vector<std::vector<double>> packed;
  for (const auto& x : inputs)
    packed.push_back(alg.pack(x, op == "exp" ? alg.bivector_layout() : alg.even_layout()));
  std::vector<Rotor> rotors;
  if (op == "sqrt" || op == "log")
    for (const auto& x : inputs) rotors.push_back(make_rotor_unchecked(x));

  // dispatch once, outside the timed loops
  std::function<double(int)> fast_call, generic_call;
  if (op == "exp") {
    std::vector<BivectorPacked> in;
    for (const auto& p : packed) in.push_back({to_array<double, 6>(p)});
    fast_call = [in](int k) { return exp_r301(in[k]).c[0]; };
  } else if (op == "log") {
    std::vector<EvenPacked<R301>> in;
    for (const auto& p : packed) in.push_back({to_array<double, 8>(p)});
    fast_call = [in](int k) { return log_r301(in[k]).c[0]; };
  } else {
    const bool sq = op == "sqrt";
    auto bind = [&]<class Alg>(EvenPacked<Alg> (*norm)(const EvenPacked<Alg>&),
                               EvenPacked<Alg> (*root)(const EvenPacked<Alg>&)) {
      std::vector<EvenPacked<Alg>> in;
      for (const auto& p : packed) {
        EvenPacked<Alg> x;
        std::copy(p.begin(), p.end(), x.c.begin());
        in.push_back(x);
      }
      auto f = sq ? root : norm;
      fast_call = [in, f](int k) { return f(in[k]).c[0]; };
    };
    if (algebra == "r31") bind(normalize_r31, sqrt_r31);
    else if (algebra == "r301") bind(normalize_r301, sqrt_r301);
    else if (algebra == "r4") bind(normalize_r4, sqrt_r4);
    else bind(normalize_r41, sqrt_r41);
  }
  if (op == "normalize")
    generic_call = [&](int k) { return normalize(inputs[k], NormBranch::magnitude).rotor.value().scalar_part(); };
  else if (op == "sqrt")
    generic_call = [&](int k) { return sqrt_rotor(rotors[k]).value().scalar_part(); };
  else if (op == "log")
    generic_call = [&](int k) { return log_rotor(rotors[k]).max_abs(); };
  else
    generic_call = [&](int k) { return exp_bivector(inputs[k]).value().scalar_part(); };

  BenchResult res{std::string(op), std::string(algebra), iterations};
  if (iterations <= 0) return res;
  double sink = 0.0;
  res.fast_ns = elapsed_ns([&] {
                  for (long i = 0; i < iterations; ++i) sink += fast_call(int(i % kPool));
                }) / double(iterations);
  res.generic_ns = elapsed_ns([&] {
                     for (long i = 0; i < iterations; ++i) sink += generic_call(int(i % kPool));
                   }) / double(iterations);
  g_sink = sink;
  return res;
}

}  // namespace gak
