#include "gak/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gak {

std::string canonical_label(Blade b, int label_base) {
  if (b.mask == 0) return "1";
  std::string s = "e";
  for (int i = 0; i < kMaxDim; ++i)
    if (b.mask & (1u << i)) s += char('0' + i + label_base);
  return s;
}

Algebra::Algebra(std::string name, Signature sig, int label_base,
                 std::vector<std::string> even_labels,
                 std::vector<std::string> bivector_labels)
    : name_(std::move(name)), sig_(std::move(sig)), base_(label_base) {
  for (const auto& l : even_labels) even_.push_back(make_slot(l));
  for (const auto& l : bivector_labels) bivector_.push_back(make_slot(l));
}

Slot Algebra::make_slot(const std::string& label) const {
  auto [blade, sign] = parse_label(label);
  return Slot{blade, sign, label};
}

std::pair<Blade, int> Algebra::parse_label(std::string_view text) const {
  auto bad = [&] {
    return Error(ErrorKind::invalid_argument,
                 "invalid blade label '" + std::string(text) + "' for " + name_);
  };
  if (text == "1" || text == "s") return {Blade{0}, 1};
  if (text.size() < 2 || text[0] != 'e') throw bad();
  std::vector<int> idx;
  for (char ch : text.substr(1)) {
    if (ch < '0' || ch > '9') throw bad();
    const int i = ch - '0' - base_;
    if (i < 0 || i >= sig_.dim()) throw bad();
    if (std::find(idx.begin(), idx.end(), i) != idx.end()) throw bad();
    idx.push_back(i);
  }
  // bubble into ascending order, tracking the permutation parity
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b + 1 < idx.size() - a; ++b)
      if (idx[b] > idx[b + 1]) std::swap(idx[b], idx[b + 1]), sign = -sign;
  std::uint32_t mask = 0;
  for (int i : idx) mask |= 1u << i;
  return {Blade{mask}, sign};
}

std::pair<std::string, int> Algebra::label(Blade b) const {
  for (const auto* layout : {&even_, &bivector_})
    for (const Slot& s : *layout)
      if (s.blade == b) return {s.label, s.sign};
  return {canonical_label(b, base_), 1};
}

std::vector<double> Algebra::pack(const Multivector& x, const std::vector<Slot>& layout) const {
  if (!(x.signature() == sig_))
    throw Error(ErrorKind::signature_mismatch, "cannot pack: signature differs from " + name_);
  std::vector<double> out;
  out.reserve(layout.size());
  std::vector<bool> used(x.size(), false);
  for (const Slot& s : layout) {
    out.push_back(s.sign * x[s.blade]);
    used[s.blade.mask] = true;
  }
  for (int i = 0; i < x.size(); ++i)
    if (!used[i] && x.coeff(i) != 0.0)
      throw Error(ErrorKind::invalid_argument,
                  "cannot pack: component " + canonical_label(Blade{std::uint32_t(i)}, base_) +
                      " is outside the packed layout");
  return out;
}

Multivector Algebra::unpack(std::span<const double> packed, const std::vector<Slot>& layout) const {
  if (packed.size() != layout.size())
    throw Error(ErrorKind::invalid_argument, "packed array length does not match the layout");
  std::array<double, kMaxBlades> c{};
  for (std::size_t k = 0; k < layout.size(); ++k) c[layout[k].blade.mask] = layout[k].sign * packed[k];
  return Multivector(sig_, std::span<const double>(c.data(), sig_.size()));
}

const Algebra& algebra_r3() {
  static const Algebra a("r3", Signature(3, 0, 0), 1);
  return a;
}

const Algebra& algebra_r4() {
  static const Algebra a("r4", Signature(4, 0, 0), 1,
                         {"1", "e12", "e13", "e14", "e23", "e24", "e34", "e1234"});
  return a;
}

const Algebra& algebra_r31() {
  static const Algebra a("r31", Signature(3, 1, 0), 1,
                         {"1", "e12", "e13", "e14", "e23", "e24", "e34", "e1234"});
  return a;
}

const Algebra& algebra_r301() {
  static const Algebra a("r301", Signature{0, 1, 1, 1}, 0,
                         {"1", "e01", "e02", "e03", "e12", "e31", "e23", "e0123"},
                         {"e01", "e02", "e03", "e12", "e31", "e23"});
  return a;
}

const Algebra& algebra_r41() {
  static const Algebra a("r41", Signature(4, 1, 0), 1,
                         {"1", "e12", "e13", "e14", "e15", "e23", "e24", "e25", "e34", "e35",
                          "e45", "e1234", "e1235", "e1245", "e1345", "e2345"});
  return a;
}

Algebra algebra_from_tag(std::string_view tag) {
  if (tag == "r3") return algebra_r3();
  if (tag == "r4") return algebra_r4();
  if (tag == "r31") return algebra_r31();
  if (tag == "r301") return algebra_r301();
  if (tag == "r41") return algebra_r41();
  constexpr std::string_view prefix = "custom:";
  if (tag.starts_with(prefix)) {
    std::string rest(tag.substr(prefix.size()));
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream in(rest);
    int p = -1, q = -1, r = -1;
    if (in >> p >> q >> r && (in >> std::ws).eof())
      return Algebra(std::string(tag), Signature(p, q, r), 1);
  }
  throw Error(ErrorKind::invalid_argument, "unknown algebra '" + std::string(tag) + "'");
}

}  // namespace gak
