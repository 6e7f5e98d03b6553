#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>

namespace gak {

inline constexpr int kMaxDim = 5;
inline constexpr int kMaxBlades = 1 << kMaxDim;

// A basis blade, identified by the set of participating basis vectors.
// Bit i set means basis vector i (declaration order) is a factor; factors are
// always taken in ascending index order.
struct Blade {
  std::uint32_t mask = 0;

  constexpr int grade() const { return std::popcount(mask); }
  friend constexpr bool operator==(Blade, Blade) = default;
};

// Sign of e_a * e_b from reordering the factors into canonical order, ignoring
// the metric.
constexpr int reorder_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  return (swaps & 1) ? -1 : 1;
}

// Metric of a real Clifford algebra R_{p,q,r}, n = p+q+r <= 5.
//
// Basis vectors keep their declaration order, so a degenerate vector may sit
// anywhere (projective algebras put e0 first). The blade multiplication table
// is built once per signature and shared between copies.
class Signature {
 public:
  // p positive, then q negative, then r null basis vectors.
  Signature(int p, int q, int r = 0);
  // Explicit per-vector squares, each in {+1, -1, 0}.
  explicit Signature(std::span<const int> basis_squares);
  Signature(std::initializer_list<int> basis_squares);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }
  int dim() const { return n_; }
  int size() const { return 1 << n_; }
  int square(int i) const { return squares_[i]; }
  std::span<const int> basis_squares() const { return {squares_.data(), std::size_t(n_)}; }

  // Product sign of two basis blades: e_a * e_b = sign * e_{a^b}; 0 when a
  // shared factor squares to zero.
  int product_sign(std::uint32_t a, std::uint32_t b) const {
    return table_->sign[a][b];
  }

  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.n_ == b.n_ && a.squares_ == b.squares_;
  }

 private:
  struct Table {
    std::int8_t sign[kMaxBlades][kMaxBlades];
  };

  void init();

  int p_ = 0, q_ = 0, r_ = 0, n_ = 0;
  std::array<int, kMaxDim> squares_{};
  std::shared_ptr<const Table> table_;
};

}  // namespace gak
