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

#include "finq/error.hpp"
#include "finq/psl2.hpp"
#include "oracles.hpp"

using namespace finq;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

Mat2<NFElement> qmat(long a, long b, long c, long d) {
  const NumberField q = NumberField::rationals();
  return {q.from_rational(a), q.from_rational(b), q.from_rational(c), q.from_rational(d)};
}

Mat2<FFElement> fmat(const FiniteField& k, std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return {k.from_u64(a), k.from_u64(b), k.from_u64(c), k.from_u64(d)};
}

GroupPreset unipotent_pair() {
  return GroupPreset::make("ab", NumberField::rationals(), {}, {{"a", qmat(1, 1, 0, 1)}, {"b", qmat(1, 0, 1, 1)}});
}

Word random_word(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> pick(0, 1), exp(-3, 3);
  std::vector<WordLetter> letters;
  while (letters.size() < length) {
    const int e = exp(rng);
    if (e != 0) letters.push_back({pick(rng) ? "a" : "b", e});
  }
  return Word(letters);
}

}  // namespace

TEST_CASE("matrix basics") {
  const auto g = qmat(2, 3, 1, 2);
  CHECK(g.det() == NumberField::rationals().one());
  CHECK(is_unimodular(g));
  CHECK(g * g.sl2_inverse() == identity(NumberField::rationals()));
  CHECK(companion(NumberField::rationals().from_rational(3)) == qmat(3, -1, 1, 0));
  CHECK(is_plus_minus_identity(-identity(NumberField::rationals())));
  CHECK(power(qmat(1, 1, 0, 1), 5, identity(NumberField::rationals())) == qmat(1, 5, 0, 1));
}

TEST_CASE("words") {
  const Word w = Word::parse("a b a^-1 b^-1");
  REQUIRE(w.letters().size() == 4);
  CHECK(w.letters()[2] == WordLetter{"a", -1});
  CHECK(to_string(w) == "a b a^-1 b^-1");
  CHECK(Word::parse("a*b^2 *a") == Word::parse("a b^2 a"));
  CHECK(Word::parse("").empty());
  CHECK(kind_of([] { Word::parse("a^0"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { Word::parse("a^"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { Word::parse("^2"); }) == ErrorKind::Parse);
}

TEST_CASE("word evaluation examples") {
  const GroupPreset g = unipotent_pair();
  CHECK(word_eval(g, Word()) == identity(NumberField::rationals()));
  CHECK(word_eval(g, Word::parse("a b a^-1 b^-1")) == qmat(3, -1, 1, 0));
  CHECK(word_eval(g, Word::parse("a^3")) == qmat(1, 3, 0, 1));
  CHECK(kind_of([&] { word_eval(g, Word::parse("c")); }) == ErrorKind::UnknownGenerator);
}

TEST_CASE("preset validation") {
  const NumberField q = NumberField::rationals();
  CHECK(kind_of([&] { GroupPreset::make("x", q, {}, {{"a", qmat(2, 0, 0, 1)}}); }) == ErrorKind::NotUnimodular);
  const Mat2<NFElement> half{q.from_rational(2), q.from_rational(0), q.from_rational(0),
                             q.from_rational(Rational(1, 2))};
  CHECK(kind_of([&] { GroupPreset::make("x", q, {}, {{"a", half}}); }) == ErrorKind::InvalidArgument);
  CHECK(GroupPreset::make("x", q, {2}, {{"a", half}}).s == std::vector<std::uint64_t>{2});
  CHECK(kind_of([&] { GroupPreset::make("x", q, {4}, {{"a", half}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("reduction examples") {
  const NumberField q = NumberField::rationals();
  for (std::uint64_t p : {2, 3, 7, 101}) {
    const Place v = nf_places_above(q, p)[0];
    CHECK(mat_reduce(identity(q), v) == identity(v.residue_field));
    const auto minus = mat_reduce(-identity(q), v);
    CHECK(is_plus_minus_identity(minus));
    CHECK(psl2_order(minus) == 1);
  }
  const Place v7 = nf_places_above(q, 7)[0];
  CHECK(mat_reduce(qmat(3, -1, 1, 0), v7) == fmat(v7.residue_field, 3, 6, 1, 0));
  const Mat2<NFElement> bad{q.one(), q.from_rational(Rational(1, 7)), q.zero(), q.one()};
  try {
    mat_reduce(bad, v7);
    FAIL("expected DenominatorAtPlace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DenominatorAtPlace);
    CHECK(std::string(e.what()).find("entry b") != std::string::npos);
  }
}

TEST_CASE("order examples") {
  const FiniteField f5 = FiniteField::prime_field(5);
  const FiniteField f7 = FiniteField::prime_field(7);
  CHECK(psl2_order(identity(f7)) == 1);
  CHECK(psl2_order(-identity(f7)) == 1);
  CHECK(psl2_order(fmat(f5, 1, 1, 0, 1)) == 5);
  CHECK(psl2_order(fmat(f7, 3, 6, 1, 0)) == 4);
  CHECK(has_psl2_order(fmat(f7, 3, 6, 1, 0), 4));
  CHECK_FALSE(has_psl2_order(fmat(f7, 3, 6, 1, 0), 2));
  CHECK_FALSE(has_psl2_order(fmat(f7, 3, 6, 1, 0), 8));
  CHECK(kind_of([&] { psl2_order(fmat(f7, 2, 0, 0, 2)); }) == ErrorKind::NotUnimodular);
}

TEST_CASE("psl2_order agrees with brute force on all of SL2(F_p), p <= 23") {
  for (std::uint64_t p : primes_up_to(23)) {
    const FiniteField k = FiniteField::prime_field(p);
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b)
        for (std::uint64_t c = 0; c < p; ++c) {
          // Solve ad - bc = 1 for d when a != 0, otherwise need -bc = 1.
          std::vector<std::uint64_t> ds;
          if (a != 0) {
            ds.push_back(mul_mod((1 + mul_mod(b, c, p)) % p, inv_mod(a, p), p));
          } else if (mul_mod(b, c, p) == p - 1) {
            for (std::uint64_t d = 0; d < p; ++d) ds.push_back(d);
          }
          for (std::uint64_t d : ds) {
            const auto g = fmat(k, a, b, c, d);
            REQUIRE(is_unimodular(g));
            CHECK(psl2_order(g) == oracle::brute_psl2_order(g));
          }
        }
  }
}

TEST_CASE("psl2_order over extension fields agrees with brute force") {
  std::mt19937_64 rng(17);
  for (const auto& [p, factor] : std::vector<std::pair<std::uint64_t, IntPolynomial>>{
           {2, IntPolynomial({1, 1, 1})}, {3, IntPolynomial({1, 0, 1})}, {5, IntPolynomial({2, 0, 1})},
           {2, IntPolynomial({1, 1, 0, 1})}, {7, IntPolynomial({1, 0, 1})}}) {
    const FiniteField k = FiniteField::make(p, factor);
    std::uniform_int_distribution<std::uint64_t> pick(0, k.order() - 1);
    for (int i = 0; i < 200; ++i) {
      const FFElement a = k.element_at(pick(rng));
      const FFElement b = k.element_at(pick(rng));
      const FFElement c = k.element_at(pick(rng));
      if (a.is_zero()) continue;
      const Mat2<FFElement> g{a, b, c, (k.one() + b * c) / a};
      CHECK(psl2_order(g) == oracle::brute_psl2_order(g));
      CHECK(psl2_order_by_powering(g, 1000) == psl2_order(g));
    }
  }
}

TEST_CASE("order from an eigenvalue") {
  const FiniteField f7 = FiniteField::prime_field(7);
  const FiniteField f17 = FiniteField::prime_field(17);
  CHECK(psl2_order_from_trace(f7, f7.from_u64(3), 1) == 3);
  CHECK(psl2_order(companion(f7.from_u64(1))) == 3);
  CHECK(psl2_order_from_trace(f7, f7.from_u64(3), -1) == 3);
  CHECK(psl2_order_from_trace(f17, f17.from_u64(2), 1) == 4);
  CHECK(psl2_order(companion(f17.from_u64(11))) == 4);
  CHECK(kind_of([&] { psl2_order_from_trace(f7, f7.from_u64(2), 1); }) == ErrorKind::OddOrder);
  CHECK(kind_of([&] { psl2_order_from_trace(f7, f7.from_u64(6), 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("reduction is a homomorphism on word values") {
  const GroupPreset g = unipotent_pair();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const auto x = word_eval(g, random_word(rng, 5));
    const auto y = word_eval(g, random_word(rng, 5));
    for (std::uint64_t p : {2, 3, 5, 13, 97}) {
      const Place v = nf_places_above(g.field, p)[0];
      CHECK(mat_reduce(x * y, v) == oracle::mul(mat_reduce(x, v), mat_reduce(y, v)));
    }
  }
}

TEST_CASE("kernel of reduction is +-I plus the maximal ideal") {
  const NumberField q = NumberField::rationals();
  std::mt19937_64 rng(29);
  for (std::uint64_t p : {3, 5, 7}) {
    const auto pl = static_cast<long>(p);
    const GroupPreset congruence =
        GroupPreset::make("gamma(p)", q, {}, {{"a", qmat(1, pl, 0, 1)}, {"b", qmat(1, 0, pl, 1)}});
    const Place v = nf_places_above(q, p)[0];
    for (int i = 0; i < 20; ++i) {
      const auto x = word_eval(congruence, random_word(rng, 4));
      CHECK(mat_reduce(x, v) == identity(v.residue_field));
      CHECK(psl2_order(mat_reduce(-x, v)) == 1);
    }
    const GroupPreset full = unipotent_pair();
    for (int i = 0; i < 40; ++i) {
      const auto x = word_eval(full, random_word(rng, 3));
      const auto r = mat_reduce(x, v);
      const bool criterion = r.b.is_zero() && r.c.is_zero() && r.a == r.d &&
                             (r.a == v.residue_field.one() || r.a == -v.residue_field.one());
      CHECK(criterion == (psl2_order(r) == 1));
    }
  }
}
