// Canonical JSON form for exact polynomials: fixed alphabet header plus a
// term list of ("num/den", exponent-vector) pairs in canonical term order.
// Serialization of a given polynomial is byte-stable, and deserialization
// accepts terms in any order and re-canonicalizes.
#include <nlohmann/json.hpp>

#include "premod/multipoly.hpp"

namespace premod {

std::string serialize(const MultiPoly& p) {
  nlohmann::json j;
  j["alphabet"] = nlohmann::json::array();
  for (const char* name : kVarNames) j["alphabet"].push_back(name);
  j["terms"] = nlohmann::json::array();
  for (const Term& t : p.terms()) {
    nlohmann::json jt;
    jt["c"] = rational_to_string(t.c);
    jt["e"] = nlohmann::json::array();
    for (int i = 0; i < kVarCount; ++i) jt["e"].push_back(static_cast<int>(t.m.e[i]));
    j["terms"].push_back(std::move(jt));
  }
  return j.dump();
}

MultiPoly deserialize(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed polynomial JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("terms"))
    throw ArgumentError("polynomial JSON must have 'alphabet' and 'terms'");
  const auto& alpha = j["alphabet"];
  if (!alpha.is_array() || alpha.size() != static_cast<std::size_t>(kVarCount))
    throw ArgumentError("polynomial JSON alphabet has wrong size");
  for (int i = 0; i < kVarCount; ++i)
    if (!alpha[i].is_string() || alpha[i].get<std::string>() != kVarNames[i])
      throw ArgumentError("polynomial JSON alphabet mismatch");
  const auto& jterms = j["terms"];
  if (!jterms.is_array()) throw ArgumentError("polynomial JSON terms must be an array");
  std::vector<Term> terms;
  terms.reserve(jterms.size());
  for (const auto& jt : jterms) {
    if (!jt.is_object() || !jt.contains("c") || !jt.contains("e"))
      throw ArgumentError("polynomial JSON term must have 'c' and 'e'");
    if (!jt["c"].is_string()) throw ArgumentError("polynomial JSON coefficient must be a string");
    Term t;
    t.c = rational_from_string(jt["c"].get<std::string>());
    const auto& je = jt["e"];
    if (!je.is_array() || je.size() != static_cast<std::size_t>(kVarCount))
      throw ArgumentError("polynomial JSON exponent vector has wrong size");
    for (int i = 0; i < kVarCount; ++i) {
      if (!je[i].is_number_integer())
        throw ArgumentError("polynomial JSON exponent must be an integer");
      long e = je[i].get<long>();
      if (e < 0 || e > 0xffff) throw ArgumentError("polynomial JSON exponent out of range");
      t.m.e[i] = static_cast<std::uint16_t>(e);
    }
    terms.push_back(std::move(t));
  }
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace premod
