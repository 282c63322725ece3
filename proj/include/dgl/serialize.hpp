#pragma once

#include <json.hpp>
#include <string>

#include "dgl/laurent.hpp"
#include "dgl/poly.hpp"

namespace dgl {

using json = nlohmann::json;

// canonical encodings: FqElem as base-p digit list, PolyA as coefficient
// list (constant term first), Laurent as {top_exponent, coefficients,
// precision} with coefficients from the top exponent downward

inline json fq_to_json(const FqCtx& C, uint64_t packed) {
  json a = json::array();
  for (uint32_t d : C.digits(packed)) a.push_back(d);
  return a;
}

inline uint64_t fq_from_json(const FqCtx& C, const json& j) {
  if (j.is_number_integer()) return C.from_int(j.get<int64_t>());
  if (!j.is_array()) throw config_error("field element must be an integer or digit list");
  std::vector<uint32_t> digits;
  for (auto& v : j) digits.push_back(static_cast<uint32_t>(v.get<int64_t>() % C.p()));
  return C.from_digits(digits);
}

inline json poly_to_json(const PolyA& f) {
  json a = json::array();
  for (int i = 0; i <= f.deg(); ++i) a.push_back(fq_to_json(f.ctx(), f.coeff_packed(i)));
  return a;
}

inline json ratk_to_json(const RatK& x) {
  return json{{"num", poly_to_json(x.num())}, {"den", poly_to_json(x.den())}};
}

inline json laurent_to_json(const LaurentKInf& x) {
  json coeffs = json::array();
  for (int e = x.top_exponent(); e >= x.bottom() && !x.is_zero_to_prec(); --e)
    coeffs.push_back(fq_to_json(x.ctx(), x.coeff_packed(e)));
  json j{{"top_exponent", x.is_zero_to_prec() ? 0 : x.top_exponent()}, {"coefficients", coeffs}};
  if (x.is_exact())
    j["precision"] = "exact";
  else
    j["precision"] = x.precision();
  return j;
}

inline json check_to_json(const std::string& name, bool pass, const json& lhs, const json& rhs,
                          int residual_degree) {
  return json{{"name", name},
              {"status", pass ? "pass" : "fail"},
              {"lhs", lhs},
              {"rhs", rhs},
              {"residual_degree", residual_degree}};
}

// Parses the input sugar "2*theta^3 + theta + 1" (also accepts a JSON
// coefficient list).  Coefficients are base-p integers, or digit lists for
// extension fields.
inline PolyA poly_from_text(const FqCtx& C, const std::string& text) {
  PolyA out(C);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw config_error("expected '+' or '-' in polynomial: " + text);
    }
    first = false;
    int64_t coeff = 1;
    bool saw_coeff = false;
    if (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        coeff = coeff * 10 + (text[i++] - '0');
      saw_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    int64_t expo = 0;
    if (i + 4 < text.size() + 1 && text.compare(i, 5, "theta") == 0) {
      i += 5;
      expo = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
          throw config_error("expected exponent after '^' in: " + text);
        expo = 0;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
          expo = expo * 10 + (text[i++] - '0');
      }
    } else if (!saw_coeff) {
      throw config_error("expected coefficient or 'theta' in polynomial: " + text);
    }
    uint64_t c = C.from_int(sign * coeff);
    if (c != 0) {
      PolyA mono = PolyA::monomial(C, static_cast<int>(expo), c);
      out += mono;
    }
  }
  return out;
}

inline PolyA poly_from_json(const FqCtx& C, const json& j) {
  if (j.is_string()) return poly_from_text(C, j.get<std::string>());
  if (!j.is_array()) throw config_error("polynomial must be a string or coefficient list");
  PolyA out(C);
  int i = 0;
  for (auto& v : j) {
    uint64_t c = fq_from_json(C, v);
    if (c != 0) out += PolyA::monomial(C, i, c);
    ++i;
  }
  return out;
}

// Minimal structural validator for the subset of JSON Schema emitted by
// report_schema(): type, properties, required, items, enum.
inline bool schema_validate(const json& doc, const json& schema, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (schema.contains("type")) {
    std::string t = schema["type"];
    bool ok = (t == "object" && doc.is_object()) || (t == "array" && doc.is_array()) ||
              (t == "string" && doc.is_string()) || (t == "integer" && doc.is_number_integer()) ||
              (t == "number" && doc.is_number()) || (t == "boolean" && doc.is_boolean());
    if (t == "integer_or_string") ok = doc.is_number_integer() || doc.is_string();
    if (!ok) return fail("type mismatch: expected " + t);
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (auto& v : schema["enum"]) ok |= (v == doc);
    if (!ok) return fail("value not in enum");
  }
  if (schema.contains("required"))
    for (auto& k : schema["required"])
      if (!doc.contains(k.get<std::string>())) return fail("missing required key " + k.get<std::string>());
  if (schema.contains("properties") && doc.is_object()) {
    for (auto& [k, sub] : schema["properties"].items())
      if (doc.contains(k) && !schema_validate(doc[k], sub, why)) return false;
  }
  if (schema.contains("items") && doc.is_array()) {
    for (auto& el : doc)
      if (!schema_validate(el, schema["items"], why)) return false;
  }
  return true;
}

// stable schema for the report documents
inline json report_schema() {
  json fq = {{"type", "array"}, {"items", {{"type", "integer"}}}};
  json poly = {{"type", "array"}, {"items", fq}};
  json laurent = {{"type", "object"},
                  {"required", {"top_exponent", "coefficients", "precision"}},
                  {"properties",
                   {{"top_exponent", {{"type", "integer"}}},
                    {"coefficients", poly},
                    {"precision", {{"type", "integer_or_string"}}}}}};
  json check = {{"type", "object"},
                {"required", {"name", "status"}},
                {"properties",
                 {{"name", {{"type", "string"}}},
                  {"status", {{"type", "string"}, {"enum", {"pass", "fail"}}}},
                  {"residual_degree", {{"type", "integer"}}}}}};
  return json{
      {"$schema", "https://json-schema.org/draft/2020-12/schema"},
      {"title", "dgl report"},
      {"type", "object"},
      {"required", {"command", "q"}},
      {"properties",
       {{"command", {{"type", "string"}}},
        {"q", {{"type", "integer"}}},
        {"precision", {{"type", "integer"}}},
        {"cutoff", {{"type", "integer"}}},
        {"seed", {{"type", "integer"}}},
        {"value", laurent},
        {"checks", {{"type", "array"}, {"items", check}}}}},
      {"$defs", {{"fq", fq}, {"poly", poly}, {"laurent", laurent}, {"check", check}}}};
}

}  // namespace dgl
