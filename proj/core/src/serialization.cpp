// Copyright 2026 The finq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "finq/serialization.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <initializer_list>

#include "finq/error.hpp"

namespace finq {

using nlohmann::json;

namespace {

constexpr int kVersion = 1;

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Parse, what); }

void expect_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) bad(where + ": expected an object");
  if (j.size() != keys.size()) bad(where + ": expected exactly " + std::to_string(keys.size()) + " keys");
  for (const char* key : keys) {
    if (!j.contains(key)) bad(where + ": missing key '" + key + "'");
  }
}

const std::string& as_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a string");
  return j.get_ref<const std::string&>();
}

bool as_bool(const json& j, const std::string& where) {
  if (!j.is_boolean()) bad(where + ": expected a boolean");
  return j.get<bool>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array");
  return j;
}

// Certificates only accept canonical decimal strings.
Integer strict_integer(const json& j, const std::string& where) {
  const std::string& text = as_string(j, where);
  Integer value = parse_integer(text);
  if (to_string(value) != text) bad(where + ": non-canonical integer '" + text + "'");
  return value;
}

Rational strict_rational(const json& j, const std::string& where) {
  const std::string& text = as_string(j, where);
  Rational value = parse_rational(text);
  if (to_string(value) != text) bad(where + ": non-canonical rational '" + text + "'");
  return value;
}

std::uint64_t strict_u64(const json& j, const std::string& where) {
  Integer value = strict_integer(j, where);
  if (!fits_u64(value)) bad(where + ": out of range");
  return to_u64(value);
}

// Preset files are hand-written, so plain JSON numbers are fine there.
Integer loose_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? from_u64(j.get<std::uint64_t>()) : Integer(j.get<long>());
  return parse_integer(as_string(j, where));
}

Rational loose_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(loose_integer(j, where));
  return parse_rational(as_string(j, where));
}

template <class T, class F>
std::vector<T> read_vector(const json& j, const std::string& where, F&& read) {
  std::vector<T> out;
  for (std::size_t i = 0; i < as_array(j, where).size(); ++i) {
    out.push_back(read(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json integers_json(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json u64s_json(const std::vector<std::uint64_t>& values) {
  json out = json::array();
  for (auto v : values) out.push_back(std::to_string(v));
  return out;
}

json rationals_json(const RationalVector& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json matrix_json(const RationalMatrix& m) {
  json out = json::array();
  for (const auto& entry : m) out.push_back(rationals_json(entry));
  return out;
}

RationalMatrix read_matrix(const json& j, const std::string& where, bool strict) {
  if (!j.is_array() || j.size() != 4) bad(where + ": expected four entries");
  RationalMatrix out;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    out[i] = strict ? read_vector<Rational>(j[i], at, strict_rational) : read_vector<Rational>(j[i], at, loose_rational);
  }
  return out;
}

std::vector<std::uint64_t> read_primes(const json& j, const std::string& where, bool strict) {
  return read_vector<std::uint64_t>(j, where, [strict](const json& e, const std::string& at) {
    if (strict) return strict_u64(e, at);
    Integer v = loose_integer(e, at);
    if (!fits_u64(v)) bad(at + ": out of range");
    return to_u64(v);
  });
}

json preset_json(const PresetRecord& preset) {
  json gens = json::object();
  for (const auto& [name, m] : preset.generators) gens[name] = matrix_json(m);
  return json{{"label", preset.label}, {"S", u64s_json(preset.s)}, {"generators", gens}};
}

PresetRecord read_preset_record(const json& j, const std::string& where, bool strict) {
  PresetRecord out;
  out.label = as_string(j.at("label"), where + ".label");
  out.s = read_primes(j.at("S"), where + ".S", strict);
  const json& gens = j.at("generators");
  if (!gens.is_object()) bad(where + ".generators: expected an object");
  for (const auto& [name, m] : gens.items()) {
    out.generators.emplace_back(name, read_matrix(m, where + ".generators." + name, strict));
  }
  return out;
}

json poly_json(const IntPolynomial& f) {
  json out = json::array();
  for (const auto& c : f.coefficients()) out.push_back(to_string(c));
  return out;
}

json residues_json(const ResidueVector& v) { return u64s_json(v); }

ResidueVector read_residues(const json& j, const std::string& where) {
  return read_vector<std::uint64_t>(j, where, strict_u64);
}

IntPolynomial read_poly(const json& j, const std::string& where, bool strict) {
  std::vector<Integer> coeffs = strict ? read_vector<Integer>(j, where, strict_integer)
                                       : read_vector<Integer>(j, where, loose_integer);
  IntPolynomial f(coeffs);
  if (strict && f.coefficients() != coeffs) bad(where + ": trailing zero coefficients");
  return f;
}

}  // namespace

std::string serialize_certificate(const OrderCertificate& c) {
  json element;
  element["kind"] = std::string(to_string(c.element.kind));
  element["matrix"] = c.element.kind == ElementKind::Trace ? json(nullptr) : matrix_json(c.element.matrix);
  element["trace"] = c.element.kind == ElementKind::Trace ? rationals_json(c.element.trace) : json(nullptr);
  element["word"] = c.element.kind == ElementKind::Word ? json(c.element.word) : json(nullptr);
  element["preset"] = c.element.preset ? preset_json(*c.element.preset) : json(nullptr);

  json alpha = nullptr;
  if (c.alpha) {
    json coeffs = json::array();
    for (const auto& v : c.alpha->coeffs) coeffs.push_back(residues_json(v));
    alpha = json{{"extension", c.alpha->in_extension}, {"coeffs", coeffs}};
  }
  json reduced = json::array();
  for (const auto& entry : c.reduced) reduced.push_back(residues_json(entry));

  json doc{
      {"version", kVersion},
      {"field", {{"poly", poly_json(c.field_poly)}, {"assumed_irreducible", c.assumed_irreducible}}},
      {"S", u64s_json(c.s)},
      {"element", element},
      {"m", std::to_string(c.m)},
      {"n", std::to_string(c.n)},
      {"N", to_string(c.modulus)},
      {"p", std::to_string(c.p)},
      {"place",
       {{"factor", poly_json(c.place_factor)},
        {"residue_degree", std::to_string(c.residue_degree)},
        {"ramified", c.ramified}}},
      {"epsilon", c.epsilon ? json(std::to_string(*c.epsilon)) : json(nullptr)},
      {"alpha", alpha},
      {"reduced_matrix", reduced},
      {"claimed_order", std::to_string(c.claimed_order)},
      {"level", std::string(to_string(c.level))},
      {"excluded_primes", integers_json(c.excluded_primes)},
  };
  return doc.dump();
}

OrderCertificate parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("certificate: ") + e.what());
  }
  try {
    expect_keys(doc,
                {"version", "field", "S", "element", "m", "n", "N", "p", "place", "epsilon", "alpha",
                 "reduced_matrix", "claimed_order", "level", "excluded_primes"},
                "certificate");
    if (!doc["version"].is_number_integer() || doc["version"].get<long>() != kVersion)
      bad("certificate.version: unsupported version");

    OrderCertificate c;
    const json& field = doc["field"];
    expect_keys(field, {"poly", "assumed_irreducible"}, "field");
    c.field_poly = read_poly(field["poly"], "field.poly", true);
    c.assumed_irreducible = as_bool(field["assumed_irreducible"], "field.assumed_irreducible");
    c.s = read_primes(doc["S"], "S", true);

    const json& element = doc["element"];
    expect_keys(element, {"kind", "matrix", "trace", "word", "preset"}, "element");
    const std::string& kind = as_string(element["kind"], "element.kind");
    if (kind == "matrix") {
      c.element.kind = ElementKind::Matrix;
    } else if (kind == "word") {
      c.element.kind = ElementKind::Word;
    } else if (kind == "trace") {
      c.element.kind = ElementKind::Trace;
    } else {
      bad("element.kind: unknown kind '" + kind + "'");
    }
    const bool is_trace = c.element.kind == ElementKind::Trace;
    const bool is_word = c.element.kind == ElementKind::Word;
    if (is_trace != element["matrix"].is_null()) bad("element.matrix: present exactly for matrix and word kinds");
    if (is_trace == element["trace"].is_null()) bad("element.trace: present exactly for the trace kind");
    if (is_word == element["word"].is_null()) bad("element.word: present exactly for the word kind");
    if (is_word == element["preset"].is_null()) bad("element.preset: present exactly for the word kind");
    if (!is_trace) c.element.matrix = read_matrix(element["matrix"], "element.matrix", true);
    if (is_trace) c.element.trace = read_vector<Rational>(element["trace"], "element.trace", strict_rational);
    if (is_word) {
      c.element.word = as_string(element["word"], "element.word");
      expect_keys(element["preset"], {"label", "S", "generators"}, "element.preset");
      c.element.preset = read_preset_record(element["preset"], "element.preset", true);
    }

    c.m = strict_u64(doc["m"], "m");
    c.n = strict_u64(doc["n"], "n");
    c.modulus = strict_integer(doc["N"], "N");
    c.p = strict_u64(doc["p"], "p");

    const json& place = doc["place"];
    expect_keys(place, {"factor", "residue_degree", "ramified"}, "place");
    c.place_factor = read_poly(place["factor"], "place.factor", true);
    const std::uint64_t f = strict_u64(place["residue_degree"], "place.residue_degree");
    if (f > 64) bad("place.residue_degree: out of range");
    c.residue_degree = static_cast<unsigned>(f);
    c.ramified = as_bool(place["ramified"], "place.ramified");

    if (!doc["epsilon"].is_null()) {
      const std::string& eps = as_string(doc["epsilon"], "epsilon");
      if (eps == "1") {
        c.epsilon = 1;
      } else if (eps == "-1") {
        c.epsilon = -1;
      } else {
        bad("epsilon: expected \"1\", \"-1\" or null");
      }
    }
    if (!doc["alpha"].is_null()) {
      const json& alpha = doc["alpha"];
      expect_keys(alpha, {"extension", "coeffs"}, "alpha");
      AlphaRecord record;
      record.in_extension = as_bool(alpha["extension"], "alpha.extension");
      record.coeffs = read_vector<ResidueVector>(alpha["coeffs"], "alpha.coeffs", read_residues);
      c.alpha = std::move(record);
    }
    const json& reduced = doc["reduced_matrix"];
    if (!reduced.is_array() || reduced.size() != 4) bad("reduced_matrix: expected four entries");
    for (std::size_t i = 0; i < 4; ++i) c.reduced[i] = read_residues(reduced[i], "reduced_matrix");

    c.claimed_order = strict_u64(doc["claimed_order"], "claimed_order");
    const std::string& level = as_string(doc["level"], "level");
    if (level == "paper-certified") {
      c.level = CertificateLevel::PaperCertified;
    } else if (level == "verified") {
      c.level = CertificateLevel::Verified;
    } else {
      bad("level: unknown level '" + level + "'");
    }
    c.excluded_primes = read_vector<Integer>(doc["excluded_primes"], "excluded_primes", strict_integer);
    return c;
  } catch (const json::exception& e) {
    bad(std::string("certificate: ") + e.what());
  }
}

GroupPreset parse_preset(std::string_view text) {
  json doc;
  PresetRecord record;
  IntPolynomial poly;
  try {
    doc = json::parse(text);
    expect_keys(doc, {"label", "field", "S", "generators"}, "preset");
    if (!doc["field"].is_object() || !doc["field"].contains("poly")) bad("preset.field: missing key 'poly'");
    poly = read_poly(doc["field"]["poly"], "preset.field.poly", false);
    record = read_preset_record(doc, "preset", false);
  } catch (const json::exception& e) {
    bad(std::string("preset: ") + e.what());
  }
  std::sort(record.s.begin(), record.s.end());
  const NumberField field = NumberField::make(poly);
  for (auto& [name, m] : record.generators) {
    for (auto& entry : m) {
      if (entry.size() > field.degree()) bad("preset.generators." + name + ": entry longer than the field degree");
      entry.resize(field.degree());
    }
  }
  return from_record(field, record);
}

std::string serialize_preset(const GroupPreset& preset) {
  json doc = preset_json(to_record(preset));
  doc["field"] = json{{"poly", poly_json(preset.field.defining_polynomial())}};
  return doc.dump();
}

namespace {

json element_json(const NFElement& x) { return rationals_json(to_record(x)); }

}  // namespace

std::string serialize_report(const ExceptionalReport& r) {
  json candidates = json::array();
  for (const auto& c : r.candidates) {
    candidates.push_back({{"value", element_json(c.value)},
                          {"display", to_string(c.value)},
                          {"u", element_json(c.u)},
                          {"conjugate_embedding", c.conjugate_embedding},
                          {"s_integral", c.s_integral},
                          {"status", c.status},
                          {"witness_prime", c.witness_prime ? json(std::to_string(*c.witness_prime)) : json(nullptr)},
                          {"level", c.level ? json(std::string(to_string(*c.level))) : json(nullptr)}});
  }
  json doc{{"m", std::to_string(r.m)},
           {"field", {{"poly", poly_json(r.field.defining_polynomial())}}},
           {"S", u64s_json(r.s)},
           {"S0", u64s_json(r.s0)},
           {"tau", {{"poly", poly_json(r.tau.field().defining_polynomial())}, {"value", element_json(r.tau)}}},
           {"exponent_bound", std::to_string(r.exponent_bound)},
           {"scan_bound", std::to_string(r.scan_bound)},
           {"units_complete", r.units_complete},
           {"unit_count", std::to_string(r.unit_count)},
           {"dropped", std::to_string(r.dropped)},
           {"candidates", candidates}};
  return doc.dump();
}

std::string serialize_sunits(const SUnitSet& units) {
  json solutions = json::array();
  for (const auto& sol : units.solutions) {
    json exps = json::array();
    for (auto e : sol.exponents) exps.push_back(std::to_string(e));
    solutions.push_back({{"u", to_string(sol.u)}, {"sign", std::to_string(sol.sign)}, {"exponents", exps}});
  }
  json basis = json::array();
  for (const auto& b : units.basis) basis.push_back(b);
  return json{{"primes", u64s_json(units.primes)},
              {"basis", basis},
              {"complete", units.complete},
              {"solutions", solutions}}
      .dump();
}

}  // namespace finq
