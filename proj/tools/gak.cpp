// gak: JSON front end for the rotor toolkit.
//
//   gak apply <normalize|sqrt|exp|log|split|power|trirefl> [JSON] [flags]
//   gak check <rotor|roundtrip|split|ortho4|kernels> [--seed N] [--count N]
//   gak bench <op> <algebra> [--count N] [--count-ops]
//
// Exit codes: 0 success, 1 usage or parse error, 2 mathematical error
// (singular input, branch point, ...), 3 property violation in check.

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "gak/bench.hpp"
#include "gak/checks.hpp"
#include "gak/doc.hpp"
#include "gak/kernels.hpp"
#include "gak/rotor.hpp"

namespace {

using nlohmann::json;
using namespace gak;

struct ApplyOptions {
  std::string op;
  std::string input;
  std::string algebra;
  std::string engine = "generic";
  std::string branch = "principal";
  std::string probe;
  std::optional<double> t;
  double tol = 0.0;
};

std::string read_input(const std::string& arg) {
  if (!arg.empty() && arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

double study_norm_or_nan(const Multivector& x) {
  try {
    return study_norm(study_from(x * reverse(x)));
  } catch (const Error&) {
    return std::nan("");
  }
}

bool has_kernel(const std::string& op, const std::string& alg) {
  const bool featured = alg == "r31" || alg == "r301" || alg == "r4" || alg == "r41";
  if (op == "normalize" || op == "sqrt") return featured;
  if (op == "log" || op == "exp") return alg == "r301";
  return false;
}

template <class Alg>
Multivector fast_even(const std::string& op, const Multivector& x,
                      EvenPacked<Alg> (*norm)(const EvenPacked<Alg>&),
                      EvenPacked<Alg> (*root)(const EvenPacked<Alg>&)) {
  const auto packed = pack_even<Alg>(x);
  return unpack(op == "sqrt" ? root(packed) : norm(packed));
}

Multivector run_fast(const std::string& op, const MultivectorDoc& doc) {
  const std::string& a = doc.algebra.name();
  const Multivector& x = doc.value;
  if (op == "log") return unpack(log_r301(pack_even<R301>(x)));
  if (op == "exp") return unpack(exp_r301(pack_bivector(x)));
  if (a == "r31") return fast_even<R31>(op, x, normalize_r31, sqrt_r31);
  if (a == "r301") return fast_even<R301>(op, x, normalize_r301, sqrt_r301);
  if (a == "r4") return fast_even<R4>(op, x, normalize_r4, sqrt_r4);
  return fast_even<R41>(op, x, normalize_r41, sqrt_r41);
}

json apply(const ApplyOptions& o) {
  const MultivectorDoc doc =
      parse_doc(read_input(o.input), o.algebra.empty() ? std::nullopt : std::optional(o.algebra));
  const Algebra& alg = doc.algebra;
  const Multivector& x = doc.value;
  auto coeffs = [&](const Multivector& m) { return coeffs_to_json(alg, m, o.tol); };
  json out = {{"algebra", alg.name()}};
  json diag = {{"engine", o.engine}};

  if (o.engine == "fast") {
    if (!has_kernel(o.op, alg.name()))
      throw Error(ErrorKind::invalid_argument,
                  "no fast kernel for " + o.op + " on " + alg.name() + " (use --engine generic)");
    const Multivector r = run_fast(o.op, doc);
    out["coeffs"] = coeffs(r);
    if (o.op != "log") diag["rotor_residual"] = Rotor::condition_residual(r);
    if (o.op == "normalize") diag["study_norm"] = study_norm_or_nan(x);
    out["diagnostics"] = diag;
    return out;
  }

  if (o.op == "normalize") {
    const PolarParts pp =
        normalize(x, o.branch == "magnitude" ? NormBranch::magnitude : NormBranch::principal);
    out["coeffs"] = coeffs(pp.rotor.value());
    out["scale"] = coeffs(pp.scale.to_multivector());
    diag["rotor_residual"] = Rotor::condition_residual(pp.rotor.value());
    diag["study_norm"] = study_norm_or_nan(x);
    diag["branch"] = std::string(pp.used_magnitude ? "magnitude" : to_string(pp.branch));
  } else if (o.op == "sqrt") {
    const Rotor r = sqrt_rotor(Rotor(x));
    out["coeffs"] = coeffs(r.value());
    diag["rotor_residual"] = Rotor::condition_residual(r.value());
    diag["study_norm"] = study_norm_or_nan(x + 1.0);
  } else if (o.op == "exp") {
    const BivectorSplit sp = invariant_split(x);
    const Rotor r = exp_bivector(x);
    out["coeffs"] = coeffs(r.value());
    diag["rotor_residual"] = Rotor::condition_residual(r.value());
    diag["degenerate"] = sp.degenerate;
  } else if (o.op == "log") {
    out["coeffs"] = coeffs(log_rotor(Rotor(x)));
  } else if (o.op == "split") {
    const BivectorSplit sp = invariant_split(x);
    out["b_plus"] = coeffs(sp.b_plus);
    out["b_minus"] = coeffs(sp.b_minus);
    out["lambda_plus"] = sp.lambda_plus;
    out["lambda_minus"] = sp.lambda_minus;
    diag["degenerate"] = sp.degenerate;
  } else if (o.op == "power") {
    if (!o.t) throw Error(ErrorKind::invalid_argument, "power needs --t");
    const Rotor r = rotor_power(Rotor(x), *o.t);
    out["coeffs"] = coeffs(r.value());
    diag["rotor_residual"] = Rotor::condition_residual(r.value());
  } else if (o.op == "trirefl") {
    std::optional<Multivector> probe;
    if (!o.probe.empty()) {
      const MultivectorDoc p = parse_doc(o.probe, alg.name());
      probe = p.value;
    }
    const Trireflection tr = decompose_trireflection(x, probe);
    out["reflection"] = coeffs(tr.reflection);
    out["rotor"] = coeffs(tr.rotor);
    diag["residual"] = std::max(max_abs_diff(tr.reflection * tr.rotor, x),
                                max_abs_diff(tr.rotor * tr.reflection, x));
  }
  out["diagnostics"] = diag;
  return out;
}

int report(const Error& e) {
  std::cout << error_json(e.kind(), e.what()).dump() << "\n";
  return e.is_mathematical() ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric-algebra rotor toolkit"};
  app.require_subcommand(1);

  ApplyOptions ao;
  auto* apply_cmd = app.add_subcommand("apply", "apply an operation to a JSON multivector");
  apply_cmd->add_option("op", ao.op, "operation")
      ->required()
      ->check(CLI::IsMember({"normalize", "sqrt", "exp", "log", "split", "power", "trirefl"}));
  apply_cmd->add_option("input", ao.input, "JSON document, or - / nothing for stdin");
  apply_cmd->add_option("--algebra", ao.algebra, "r3, r4, r31, r301, r41 or custom:p,q,r");
  apply_cmd->add_option("--engine", ao.engine, "generic or fast")
      ->check(CLI::IsMember({"generic", "fast"}));
  apply_cmd->add_option("--branch", ao.branch, "normalize branch: principal or magnitude")
      ->check(CLI::IsMember({"principal", "magnitude"}));
  apply_cmd->add_option("--t", ao.t, "exponent for power");
  apply_cmd->add_option("--probe", ao.probe, "probe vector (JSON) for trirefl");
  apply_cmd->add_option("--tol", ao.tol, "omit output coefficients with |c| <= tol");

  std::string suite;
  std::uint64_t seed = 1;
  long count = 1000;
  auto* check_cmd = app.add_subcommand("check", "run a property suite");
  check_cmd->add_option("suite", suite, "rotor, roundtrip, split, ortho4 or kernels")
      ->required()
      ->check(CLI::IsMember(check_suites()));
  check_cmd->add_option("--seed", seed, "random seed");
  check_cmd->add_option("--count", count, "samples per algebra")->check(CLI::NonNegativeNumber);

  std::string bench_op, bench_alg;
  long iterations = 1000000;
  bool count_ops = false;
  auto* bench_cmd = app.add_subcommand("bench", "time fast kernels against the generic engine");
  bench_cmd->add_option("op", bench_op, "normalize, sqrt, log or exp")->required();
  bench_cmd->add_option("algebra", bench_alg, "r31, r301, r4 or r41")->required();
  bench_cmd->add_option("--count", iterations, "iterations")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--seed", seed, "random seed");
  bench_cmd->add_flag("--count-ops", count_ops, "print the kernel's arithmetic operation counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (apply_cmd->parsed()) {
      std::cout << apply(ao).dump() << "\n";
      return 0;
    }
    if (check_cmd->parsed()) {
      const CheckReport rep = run_check(suite, seed, count);
      std::cout << rep.format();
      return rep.pass() ? 0 : 3;
    }
    if (count_ops) {
      std::cout << format_op_counts(count_kernel_ops(bench_op, bench_alg), op_count_order(bench_op))
                << "\n";
      return 0;
    }
    const BenchResult r = run_bench(bench_op, bench_alg, iterations, seed);
    std::printf("%s %s: fast %.1f ns/op, generic %.1f ns/op, speedup %.1fx (%ld iterations)\n",
                r.op.c_str(), r.algebra.c_str(), r.fast_ns, r.generic_ns, r.speedup(),
                r.iterations);
    return 0;
  } catch (const Error& e) {
    return report(e);
  }
}
