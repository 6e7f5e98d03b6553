#include "gak/doc.hpp"

#include <cmath>
#include <vector>

namespace gak {

namespace {

Error bad(const std::string& msg) { return Error(ErrorKind::invalid_argument, msg); }

double number(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number()) throw bad("coefficient " + where + " is not a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw bad("coefficient " + where + " is not finite");
  return d;
}

Multivector from_map(const Algebra& alg, const nlohmann::json& m) {
  std::array<double, kMaxBlades> c{};
  for (const auto& [key, val] : m.items()) {
    const auto [blade, sign] = alg.parse_label(key);
    c[blade.mask] += sign * number(val, "'" + key + "'");
  }
  return Multivector(alg.signature(), std::span<const double>(c.data(), alg.signature().size()));
}

Multivector from_array(const Algebra& alg, const nlohmann::json& a) {
  std::vector<double> v;
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(number(a[i], "#" + std::to_string(i)));
  if (!alg.even_layout().empty() && v.size() == alg.even_layout().size())
    return alg.unpack(v, alg.even_layout());
  if (!alg.bivector_layout().empty() && v.size() == alg.bivector_layout().size())
    return alg.unpack(v, alg.bivector_layout());
  if (v.size() == std::size_t(alg.signature().size()))
    return Multivector(alg.signature(), v);
  std::string sizes;
  if (!alg.even_layout().empty()) sizes += std::to_string(alg.even_layout().size()) + ", ";
  if (!alg.bivector_layout().empty()) sizes += std::to_string(alg.bivector_layout().size()) + ", ";
  throw bad("dense array of length " + std::to_string(v.size()) + " does not fit " + alg.name() +
            " (expected " + sizes + std::to_string(alg.signature().size()) + ")");
}

}  // namespace

MultivectorDoc parse_doc_json(const nlohmann::json& j, std::optional<std::string> algebra_tag) {
  const nlohmann::json* coeffs = &j;
  std::optional<std::string> tag = std::move(algebra_tag);
  if (j.is_object() && (j.contains("coeffs") || j.contains("algebra"))) {
    for (const auto& [key, _] : j.items())
      if (key != "coeffs" && key != "algebra") throw bad("unexpected field '" + key + "'");
    if (!j.contains("coeffs")) throw bad("document has no 'coeffs'");
    coeffs = &j.at("coeffs");
    if (j.contains("algebra")) {
      if (!j.at("algebra").is_string()) throw bad("'algebra' must be a string");
      const std::string own = j.at("algebra").get<std::string>();
      if (tag && *tag != own)
        throw bad("algebra '" + *tag + "' requested but the document is in '" + own + "'");
      tag = own;
    }
  }
  if (!tag) throw bad("no algebra given (use an 'algebra' field or --algebra)");
  Algebra alg = algebra_from_tag(*tag);
  if (coeffs->is_object()) return {alg, from_map(alg, *coeffs)};
  if (coeffs->is_array()) return {alg, from_array(alg, *coeffs)};
  throw bad("coefficients must be an object or an array");
}

MultivectorDoc parse_doc(std::string_view text, std::optional<std::string> algebra_tag) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw bad(std::string("invalid JSON: ") + e.what());
  }
  return parse_doc_json(j, std::move(algebra_tag));
}

nlohmann::json coeffs_to_json(const Algebra& alg, const Multivector& x, double chop) {
  nlohmann::json out = nlohmann::json::object();
  for (int m = 0; m < x.size(); ++m) {
    const double c = x.coeff(std::uint32_t(m));
    if (c == 0.0 || std::abs(c) <= chop) continue;
    const auto [label, sign] = alg.label(Blade{std::uint32_t(m)});
    out[label] = sign * c;
  }
  return out;
}

nlohmann::json to_json(const MultivectorDoc& doc, double chop) {
  return {{"algebra", doc.algebra.name()}, {"coeffs", coeffs_to_json(doc.algebra, doc.value, chop)}};
}

nlohmann::json error_json(ErrorKind kind, std::string_view message) {
  return {{"error", {{"kind", std::string(to_string(kind))}, {"message", std::string(message)}}}};
}

}  // namespace gak
