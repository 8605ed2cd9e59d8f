#pragma once

// Canonical JSON for polynomials and reports. Coefficients are decimal
// strings since they outgrow 64 bits quickly (40! is about 8e47).
//
//   MultiPoly: {"vars": k, "terms": [[[e1, ..., ek], "coeff"], ...]}  (grevlex, descending)
//   UniPoly:   {"coeffs": ["c0", "c1", ...]}
//   Report:    {"checker", "params", "instances", "violations", "seed"?, "elapsed_ms", ...}

#include "cyclopadic/integer.hpp"
#include "cyclopadic/multipoly.hpp"
#include "cyclopadic/report.hpp"
#include "cyclopadic/unipoly.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclopadic {

using Json = nlohmann::ordered_json;

inline Json to_json(const MultiPoly& p) {
  const std::size_t k = p.nvars();
  Json terms = Json::array();
  for (const auto& [m, c] : p) terms.push_back(Json::array({m.padded(k), to_decimal(c)}));
  return Json{{"vars", k}, {"terms", std::move(terms)}};
}

inline MultiPoly multipoly_from_json(const Json& j) {
  const auto k = j.at("vars").get<std::size_t>();
  MultiPoly out;
  for (const auto& t : j.at("terms")) {
    auto e = t.at(0).get<std::vector<std::uint32_t>>();
    if (e.size() != k) throw std::invalid_argument("exponent vector length does not match vars");
    const Monomial m(std::move(e));
    if (out.terms().count(m)) throw std::invalid_argument("duplicate term in polynomial JSON");
    const Integer c = integer_from_decimal(t.at(1).get<std::string>());
    if (is_zero(c)) throw std::invalid_argument("zero coefficient in polynomial JSON");
    out.add_term(m, c);
  }
  return out;
}

inline Json to_json(const UniPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_decimal(c));
  return Json{{"coeffs", std::move(coeffs)}};
}

inline UniPoly unipoly_from_json(const Json& j) {
  std::vector<Integer> v;
  for (const auto& c : j.at("coeffs")) v.push_back(integer_from_decimal(c.get<std::string>()));
  return UniPoly(std::move(v));
}

inline Json valuation_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

/// `with_timing` false writes elapsed_ms as 0 so that repeated runs are
/// byte-identical.
inline Json to_json(const CongruenceReport& r, bool with_timing = false) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(Json{{"instance", v.instance},
                              {"at", v.exponents},
                              {"difference", to_decimal(v.difference)},
                              {"modulus", v.modulus ? Json(to_decimal(*v.modulus)) : Json("exact")},
                              {"observed_valuation", valuation_json(v.observed)},
                              {"required_valuation", valuation_json(v.required)}});
  }
  Json out{{"checker", r.checker}, {"params", std::move(params)}, {"instances", r.instances},
           {"violations", std::move(violations)}};
  if (r.seed) out["seed"] = *r.seed;
  out["elapsed_ms"] = with_timing ? r.elapsed_ms : 0;
  if (!r.asserted) out["asserted"] = false;
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

/// One line of human-readable text carrying the same data.
inline std::string to_text(const CongruenceReport& r, bool with_timing = false) {
  std::string out = r.checker;
  for (const auto& [k, v] : r.params) out += " " + k + "=" + std::to_string(v);
  if (r.seed) out += " seed=" + std::to_string(*r.seed);
  out += " instances=" + std::to_string(r.instances);
  out += " violations=" + std::to_string(r.violations.size());
  if (with_timing) out += " elapsed_ms=" + std::to_string(r.elapsed_ms);
  out += r.passed() ? " PASS" : (r.asserted ? " FAIL" : " FAIL(unasserted)");
  for (const auto& v : r.violations) {
    out += "\n  violation " + v.instance + " difference=" + to_decimal(v.difference) + " modulus=" +
           (v.modulus ? to_decimal(*v.modulus) : std::string("exact")) + " v_p=" + v.observed.str() +
           " required=" + v.required.str();
  }
  for (const auto& note : r.notes) out += "\n  note: " + note;
  return out;
}

}  // namespace cyclopadic
