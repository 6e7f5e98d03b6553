#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace gak {

struct OpCounts {
  long mul = 0, add = 0, div = 0, sqrt = 0, acos = 0, sincos = 0;

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

// Per-thread tally filled in by arithmetic on Counted values.
OpCounts& op_counts();
void reset_op_counts();

// Scalar that tallies every arithmetic operation it takes part in.
// Subtraction counts as an addition; comparisons and unary minus are free.
struct Counted {
  double v = 0.0;

  Counted() = default;
  Counted(double x) : v(x) {}  // NOLINT: literals mix freely with counted values

  friend Counted operator+(Counted a, Counted b) { ++op_counts().add; return {a.v + b.v}; }
  friend Counted operator-(Counted a, Counted b) { ++op_counts().add; return {a.v - b.v}; }
  friend Counted operator*(Counted a, Counted b) { ++op_counts().mul; return {a.v * b.v}; }
  friend Counted operator/(Counted a, Counted b) { ++op_counts().div; return {a.v / b.v}; }
  friend Counted operator-(Counted a) { return {-a.v}; }

  friend bool operator==(Counted a, Counted b) { return a.v == b.v; }
  friend auto operator<=>(Counted a, Counted b) { return a.v <=> b.v; }
};

inline double to_double(double x) { return x; }
inline double to_double(Counted x) { return x.v; }

inline double ksqrt(double x) { return std::sqrt(x); }
inline double kacos(double x) { return std::acos(x); }
inline std::pair<double, double> ksincos(double x) { return {std::sin(x), std::cos(x)}; }

inline Counted ksqrt(Counted x) { ++op_counts().sqrt; return {std::sqrt(x.v)}; }
inline Counted kacos(Counted x) { ++op_counts().acos; return {std::acos(x.v)}; }
inline std::pair<Counted, Counted> ksincos(Counted x) {
  ++op_counts().sincos;
  return {Counted{std::sin(x.v)}, Counted{std::cos(x.v)}};
}

// "23 mul, 10 add, 1 sqrt, 1 div" with the fields in the given order; names
// are mul, add, div, sqrt, acos, sincos. Zero entries are skipped.
std::string format_op_counts(const OpCounts& c, const std::vector<std::string>& order);

}  // namespace gak
