#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gak/multivector.hpp"

namespace gak {

// One entry of a packed coefficient layout: packed value = sign * canonical
// coefficient of `blade`.
struct Slot {
  Blade blade;
  int sign = 1;
  std::string label;
};

// A named algebra: signature, the index of the first basis vector in labels
// (e0 for projective, e1 otherwise), and the packed orderings of its fast
// kernels.
class Algebra {
 public:
  Algebra(std::string name, Signature sig, int label_base,
          std::vector<std::string> even_labels = {},
          std::vector<std::string> bivector_labels = {});

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  int label_base() const { return base_; }

  const std::vector<Slot>& even_layout() const { return even_; }
  const std::vector<Slot>& bivector_layout() const { return bivector_; }

  // Preferred label of a blade: the packed-layout label when one exists
  // (e.g. "e31" in PGA), otherwise ascending indices. Returns the sign that
  // relates the labelled blade to the canonical one.
  std::pair<std::string, int> label(Blade b) const;

  // Parses "1", "e12", "e31", ... into (canonical blade, sign). Throws
  // invalid_argument on unknown or repeated indices.
  std::pair<Blade, int> parse_label(std::string_view text) const;

  // Dense packed array <-> multivector. unpack expects exactly the layout
  // size; pack throws if x has content outside the layout.
  std::vector<double> pack(const Multivector& x, const std::vector<Slot>& layout) const;
  Multivector unpack(std::span<const double> packed, const std::vector<Slot>& layout) const;

 private:
  Slot make_slot(const std::string& label) const;

  std::string name_;
  Signature sig_;
  int base_;
  std::vector<Slot> even_;
  std::vector<Slot> bivector_;
};

// Canonical label with ascending indices.
std::string canonical_label(Blade b, int label_base);

const Algebra& algebra_r3();
const Algebra& algebra_r4();
const Algebra& algebra_r31();
const Algebra& algebra_r301();
const Algebra& algebra_r41();

// "r3", "r4", "r31", "r301", "r41" or "custom:p,q,r".
Algebra algebra_from_tag(std::string_view tag);

}  // namespace gak
