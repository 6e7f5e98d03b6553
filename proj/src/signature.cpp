#include "gak/signature.hpp"

#include <sstream>
#include <vector>

#include "gak/error.hpp"

namespace gak {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::signature_mismatch: return "signature_mismatch";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::singular: return "singular";
    case ErrorKind::no_real_root: return "no_real_root";
    case ErrorKind::complex_solution: return "complex_solution";
    case ErrorKind::non_unique: return "non_unique";
    case ErrorKind::branch_point: return "branch_point";
    case ErrorKind::not_converged: return "not_converged";
  }
  return "unknown";
}

Signature::Signature(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0 || p + q + r < 1 || p + q + r > kMaxDim)
    throw Error(ErrorKind::invalid_argument,
                "signature needs p, q, r >= 0 and 1 <= p+q+r <= 5");
  int i = 0;
  for (int k = 0; k < p; ++k) squares_[i++] = 1;
  for (int k = 0; k < q; ++k) squares_[i++] = -1;
  for (int k = 0; k < r; ++k) squares_[i++] = 0;
  n_ = i;
  init();
}

Signature::Signature(std::span<const int> basis_squares) {
  if (basis_squares.empty() || basis_squares.size() > std::size_t(kMaxDim))
    throw Error(ErrorKind::invalid_argument, "signature dimension must be in [1, 5]");
  n_ = int(basis_squares.size());
  for (int i = 0; i < n_; ++i) {
    const int s = basis_squares[i];
    if (s != 1 && s != -1 && s != 0)
      throw Error(ErrorKind::invalid_argument, "basis squares must be +1, -1 or 0");
    squares_[i] = s;
  }
  init();
}

Signature::Signature(std::initializer_list<int> basis_squares)
    : Signature(std::span<const int>(basis_squares.begin(), basis_squares.size())) {}

void Signature::init() {
  p_ = q_ = r_ = 0;
  for (int i = 0; i < n_; ++i) {
    if (squares_[i] > 0) ++p_;
    else if (squares_[i] < 0) ++q_;
    else ++r_;
  }
  auto table = std::make_shared<Table>();
  const std::uint32_t count = 1u << n_;
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = 0; b < count; ++b) {
      int sign = reorder_sign(a, b);
      for (std::uint32_t common = a & b; common != 0; common &= common - 1)
        sign *= squares_[std::countr_zero(common)];
      table->sign[a][b] = std::int8_t(sign);
    }
  }
  table_ = std::move(table);
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << "R_{" << p_ << ',' << q_ << ',' << r_ << "} [";
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << squares_[i];
  os << ']';
  return os.str();
}

}  // namespace gak
