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

#include <random>

#include "finq/cyclotomic.hpp"
#include "finq/error.hpp"
#include "finq/number_field.hpp"
#include "oracles.hpp"

using namespace finq;

namespace {

NFElement eval(const RatPolynomial& p, const NFElement& t) {
  NFElement acc = t.field().zero();
  for (int i = p.degree(); i >= 0; --i) acc = acc * t + t.field().from_rational(p.coeff(static_cast<std::size_t>(i)));
  return acc;
}

NFElement random_element(std::mt19937_64& rng, const NumberField& k, bool fractions) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  std::vector<Rational> c;
  for (unsigned i = 0; i < k.degree(); ++i) {
    Rational v(num(rng), fractions ? den(rng) : 1);
    v.canonicalize();
    c.push_back(v);
  }
  return k.element(c);
}

std::vector<NumberField> test_fields() {
  return {NumberField::rationals(), NumberField::make(IntPolynomial({1, -1, 1})),
          NumberField::make(IntPolynomial({-2, 0, 1})), NumberField::make(IntPolynomial({-2, 0, 0, 1})),
          NumberField::make(IntPolynomial({-1, -1, 0, 0, 0, 1})), NumberField::make(IntPolynomial({1, 0, 0, 0, 1}))};
}

}  // namespace

TEST_CASE("field construction") {
  CHECK(NumberField::make(IntPolynomial({0, 1})).degree() == 1);
  const NumberField w = NumberField::make(IntPolynomial({1, -1, 1}));
  CHECK(w.degree() == 2);
  CHECK_FALSE(w.assumed_irreducible());
  try {
    NumberField::make(IntPolynomial({-1, 0, 1}));
    FAIL("expected Reducible");
  } catch (const ReducibleError& e) {
    CHECK(e.kind() == ErrorKind::Reducible);
    CHECK(e.factors().size() == 2);
  }
  try {
    NumberField::make(IntPolynomial({1, 0, 2}));
    FAIL("expected NotMonic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMonic);
  }
  CHECK_THROWS_AS(NumberField::make(IntPolynomial({3})), Error);
  CHECK_FALSE(NumberField::make(IntPolynomial({-2, 0, 0, 1})).assumed_irreducible());
  CHECK_FALSE(NumberField::make(IntPolynomial({-1, -1, 0, 0, 0, 1})).assumed_irreducible());
  // x^4 + 1 splits into quadratics mod every prime; recombination proves it.
  CHECK_FALSE(NumberField::make(IntPolynomial({1, 0, 0, 0, 1})).assumed_irreducible());
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2) has no rational root.
  try {
    NumberField::make(IntPolynomial({4, 0, 0, 0, 1}));
    FAIL("expected Reducible");
  } catch (const ReducibleError& e) {
    REQUIRE(e.factors().size() == 2);
    CHECK(e.factors()[0] * e.factors()[1] == IntPolynomial({4, 0, 0, 0, 1}));
    CHECK(e.factors()[0].degree() == 2);
  }
  // Product of two cyclotomic quartics and a huge-coefficient irreducible sextic.
  CHECK_THROWS_AS(NumberField::make(cyclotomic(5) * cyclotomic(8)), ReducibleError);
  CHECK_FALSE(NumberField::make(cyclotomic(21)).assumed_irreducible());
  // Coefficients too large for single-prime recombination: stays assumed.
  IntPolynomial wide = cyclotomic(8) * cyclotomic(12);
  wide += IntPolynomial({Integer(1) << 70});
  CHECK(NumberField::make(wide).degree() == 8);
}

TEST_CASE("element arithmetic") {
  const NumberField k = NumberField::make(IntPolynomial({1, -1, 1}));
  const NFElement w = k.generator();
  CHECK(w * w == w - k.one());
  CHECK(w * w * w == -k.one());
  CHECK(w * w.inverse() == k.one());
  CHECK(to_string(w + w - k.one()) == "2*x - 1");
  CHECK(k.element({Rational(1), Rational(0), Rational(1)}) == w);  // x^2 reduces to x - 1
  CHECK_THROWS_AS(k.zero().inverse(), Error);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const NFElement a = random_element(rng, k, true);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == k.one());
  }
}

TEST_CASE("characteristic polynomial examples") {
  CHECK(nf_charpoly(NumberField::rationals().from_rational(5)) == to_rational(IntPolynomial({-5, 1})));
  const NumberField k = NumberField::make(IntPolynomial({1, -1, 1}));
  CHECK(nf_charpoly(k.generator()) == to_rational(IntPolynomial({1, -1, 1})));
  CHECK(nf_charpoly(k.generator() + k.generator() - k.one()) == to_rational(IntPolynomial({3, 0, 1})));
}

TEST_CASE("characteristic polynomial annihilates the element") {
  std::mt19937_64 rng(11);
  for (const NumberField& k : test_fields()) {
    for (int i = 0; i < 20; ++i) {
      const NFElement t = random_element(rng, k, true);
      const RatPolynomial chi = nf_charpoly(t);
      CHECK(chi.degree() == static_cast<int>(k.degree()));
      CHECK(chi.lead() == 1);
      CHECK(eval(chi, t).is_zero());
    }
  }
}

TEST_CASE("places above p") {
  const NumberField k = NumberField::make(IntPolynomial({1, -1, 1}));
  const auto p7 = nf_places_above(k, 7);
  REQUIRE(p7.size() == 2);
  CHECK(p7[0].factor == IntPolynomial({2, 1}));  // x - 5
  CHECK(p7[1].factor == IntPolynomial({4, 1}));  // x - 3
  CHECK(p7[0].residue_degree == 1);
  const auto p11 = nf_places_above(k, 11);
  REQUIRE(p11.size() == 1);
  CHECK(p11[0].residue_degree == 2);
  CHECK_FALSE(p11[0].ramified);
  const auto p3 = nf_places_above(k, 3);
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].ramified);
  CHECK(p3[0].factor == IntPolynomial({1, 1}));
  CHECK_THROWS_AS(nf_places_above(k, 21), Error);
  CHECK_THROWS_AS(nf_place(k, 7, IntPolynomial({1, 1})), Error);
  CHECK(nf_place(k, 7, IntPolynomial({2, 1})).residue_degree == 1);
}

TEST_CASE("residue degrees times multiplicities sum to the field degree") {
  for (const NumberField& k : test_fields()) {
    for (std::uint64_t p : primes_up_to(1000)) {
      unsigned total = 0;
      for (const Place& v : nf_places_above(k, p)) {
        total += v.residue_degree * v.multiplicity;
        CHECK(v.residue_field.order() > 0);
        CHECK(v.ramified == (v.multiplicity > 1));
      }
      CHECK(total == k.degree());
    }
  }
}

TEST_CASE("reduction examples") {
  const NumberField q = NumberField::rationals();
  const Place v7 = nf_places_above(q, 7)[0];
  CHECK(nf_reduce(q.from_rational(10), v7) == v7.residue_field.from_u64(3));
  CHECK(nf_reduce(q.from_rational(Rational(1, 2)), v7) == v7.residue_field.from_u64(4));
  try {
    nf_reduce(q.from_rational(Rational(1, 7)), v7);
    FAIL("expected DenominatorAtPlace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DenominatorAtPlace);
  }
  const NumberField k = NumberField::make(IntPolynomial({1, -1, 1}));
  const Place w7 = nf_place(k, 7, IntPolynomial({4, 1}));
  CHECK(nf_reduce(k.generator(), w7) == w7.residue_field.from_u64(3));
}

TEST_CASE("reduction is a ring homomorphism") {
  std::mt19937_64 rng(3);
  for (const NumberField& k : test_fields()) {
    for (std::uint64_t p : primes_up_to(100)) {
      for (const Place& v : nf_places_above(k, p)) {
        for (int i = 0; i < 4; ++i) {
          NFElement a = random_element(rng, k, true), b = random_element(rng, k, true);
          if (!reduces_at(a, p) || !reduces_at(b, p)) continue;
          CHECK(nf_reduce(a + b, v) == nf_reduce(a, v) + nf_reduce(b, v));
          CHECK(nf_reduce(a * b, v) == nf_reduce(a, v) * nf_reduce(b, v));
        }
      }
    }
  }
}

TEST_CASE("S-integrality") {
  const NumberField q = NumberField::rationals();
  CHECK(is_s_integral(q.from_rational(Rational(5, 12)), {2, 3}));
  CHECK_FALSE(is_s_integral(q.from_rational(Rational(5, 12)), {2}));
  CHECK(reduces_at(q.from_rational(Rational(5, 12)), 5));
  CHECK_FALSE(reduces_at(q.from_rational(Rational(5, 12)), 3));
}
