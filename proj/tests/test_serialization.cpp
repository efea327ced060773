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

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "finq/error.hpp"
#include "finq/serialization.hpp"

using namespace finq;
using nlohmann::json;

namespace {

const NumberField& q() {
  static const NumberField field = NumberField::rationals();
  return field;
}

OrderCertificate certify_trace(const Rational& t, std::uint64_t m, const std::vector<std::uint64_t>& s = {}) {
  const WitnessResult r = certify_order_witness(WitnessElement::from_trace(q().from_rational(t)), m, s);
  REQUIRE(std::holds_alternative<OrderCertificate>(r));
  return std::get<OrderCertificate>(r);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupPreset load_preset(const std::string& label) {
  return parse_preset(read_file(std::string(FINQ_PRESET_DIR) + "/" + label + ".json"));
}

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_certificate(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

void check_round_trip(const OrderCertificate& c) {
  const std::string text = serialize_certificate(c);
  const OrderCertificate back = parse_certificate(text);
  CHECK(back == c);
  CHECK(serialize_certificate(back) == text);
}

}  // namespace

TEST_CASE("certificate layout") {
  const std::string text = serialize_certificate(certify_trace(3, 4));
  CHECK(text ==
        R"({"N":"16","S":[],"alpha":{"coeffs":[["0"],["1"]],"extension":true},"claimed_order":"4",)"
        R"("element":{"kind":"trace","matrix":null,"preset":null,"trace":["3"],"word":null},"epsilon":"1",)"
        R"("excluded_primes":["2"],"field":{"assumed_irreducible":false,"poly":["0","1"]},)"
        R"("level":"paper-certified","m":"4","n":"8","p":"7",)"
        R"("place":{"factor":["0","1"],"ramified":false,"residue_degree":"1"},)"
        R"("reduced_matrix":[["3"],["6"],["1"],["0"]],"version":1})");
  CHECK(text.find(' ') == std::string::npos);
  CHECK(text.find('\n') == std::string::npos);
}

TEST_CASE("certificates round-trip byte for byte") {
  check_round_trip(certify_trace(3, 4));
  check_round_trip(certify_trace(3, 3));
  check_round_trip(certify_trace(1, 3));
  check_round_trip(certify_trace(Rational(7, 2), 5, {2}));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-300, 300);
  int count = 0;
  for (int i = 0; i < 200; ++i) {
    const long t = num(rng);
    const std::uint64_t m = 3 + static_cast<std::uint64_t>(i % 8);
    const WitnessResult r = certify_order_witness(WitnessElement::from_trace(q().from_rational(t)), m, {});
    if (const auto* c = std::get_if<OrderCertificate>(&r)) {
      check_round_trip(*c);
      ++count;
    }
  }
  CHECK(count > 50);
}

TEST_CASE("word certificates carry the preset") {
  const GroupPreset g = load_preset("figure8");
  const WitnessElement e = WitnessElement::from_word(g, Word::parse("a b a^-1 b^-1"));
  const WitnessResult r = certify_order_witness(e, 4, {});
  REQUIRE(std::holds_alternative<OrderCertificate>(r));
  const OrderCertificate& c = std::get<OrderCertificate>(r);
  check_round_trip(c);
  const json j = json::parse(serialize_certificate(c));
  CHECK(j["element"]["kind"] == "word");
  CHECK(j["element"]["word"] == "a b a^-1 b^-1");
  CHECK(j["element"]["preset"]["label"] == "figure8");
  CHECK(verify_certificate(parse_certificate(j.dump())));
}

TEST_CASE("parsing is strict") {
  const json good = json::parse(serialize_certificate(certify_trace(3, 4)));
  CHECK_NOTHROW(parse_certificate(good.dump()));

  auto rejects = [&](auto edit) {
    json j = good;
    edit(j);
    CHECK(parse_error_kind(j.dump()) == ErrorKind::Parse);
  };
  rejects([](json& j) { j["m"] = 4; });
  rejects([](json& j) { j["p"] = "07"; });
  rejects([](json& j) { j["p"] = "+7"; });
  rejects([](json& j) { j["version"] = 2; });
  rejects([](json& j) { j["extra"] = 1; });
  rejects([](json& j) { j.erase("level"); });
  rejects([](json& j) { j["level"] = "certified"; });
  rejects([](json& j) { j["epsilon"] = "2"; });
  rejects([](json& j) { j["element"]["kind"] = "vector"; });
  rejects([](json& j) { j["element"]["trace"] = json::array({"6/2"}); });
  rejects([](json& j) { j["place"]["ramified"] = "no"; });
  rejects([](json& j) { j["S"] = "[]"; });
  json wide = good;
  wide["element"]["trace"] = json::array({"3", "0"});
  CHECK_FALSE(verify_certificate(parse_certificate(wide.dump())));
  CHECK(parse_error_kind("{") == ErrorKind::Parse);
  CHECK(parse_error_kind("[]") == ErrorKind::Parse);
  CHECK(parse_error_kind("") == ErrorKind::Parse);
}

TEST_CASE("presets load from disk") {
  const GroupPreset sl2z = load_preset("sl2z");
  CHECK(sl2z.field.degree() == 1);
  CHECK(sl2z.generators.size() == 2);
  const Mat2<NFElement> s = sl2z.generator("b");
  CHECK(s * s == -identity(sl2z.field));

  const GroupPreset f8 = load_preset("figure8");
  CHECK(f8.field.degree() == 2);
  CHECK(f8.field.defining_polynomial() == IntPolynomial({1, -1, 1}));
  const Mat2<NFElement> c = word_eval(f8, Word::parse("a b a^-1 b^-1"));
  CHECK(c.trace() == f8.field.one() + f8.field.generator());

  const GroupPreset again = parse_preset(serialize_preset(f8));
  CHECK(again.label == f8.label);
  CHECK(again.generators == f8.generators);
}

TEST_CASE("preset validation") {
  auto kind = [](const std::string& text) {
    try {
      parse_preset(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  CHECK_NOTHROW(parse_preset(R"({"label":"u","field":{"poly":[0,1]},"S":[],"generators":{"a":[[1],[1],[0],[1]]}})"));
  CHECK(kind(R"({"label":"u","field":{"poly":[0,1]},"S":[],"generators":{"a":[[2],[0],[0],[1]]}})") ==
        ErrorKind::NotUnimodular);
  CHECK(kind(R"({"label":"u","field":{"poly":[0,1]},"S":[],"generators":{"a":[[1],["1/2"],[0],[1]]}})") ==
        ErrorKind::InvalidArgument);
  CHECK_NOTHROW(parse_preset(R"({"label":"u","field":{"poly":[0,1]},"S":[2],"generators":{"a":[[1],["1/2"],[0],[1]]}})"));
  CHECK(kind(R"({"label":"u","field":{"poly":[0,1]},"S":[4],"generators":{}})") == ErrorKind::InvalidArgument);
  CHECK(kind(R"({"label":"u","field":{"poly":[0,1]}})") == ErrorKind::Parse);
  CHECK(kind("not json") == ErrorKind::Parse);
}

TEST_CASE("s-unit and report serialization") {
  const json units = json::parse(serialize_sunits(sunit_solutions_rational({2}, 5)));
  CHECK(units["complete"] == true);
  CHECK(units["solutions"].size() == 3);
  const ExceptionalReport report = exceptional_trace_candidates(3, q(), {}, 6, 200);
  const json r = json::parse(serialize_report(report));
  CHECK(r.contains("candidates"));
  CHECK(r["candidates"].size() == report.candidates.size());
}
