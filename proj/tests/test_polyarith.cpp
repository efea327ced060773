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
#include "finq/integer.hpp"
#include "finq/polynomial.hpp"
#include "oracles.hpp"

using namespace finq;

namespace {

IntPolynomial X() { return IntPolynomial({0, 1}); }

// X^k * P(X + 1/X) for k = deg P, as an integer polynomial.
IntPolynomial trace_transform(const IntPolynomial& p) {
  const std::size_t k = static_cast<std::size_t>(p.degree());
  IntPolynomial out;
  IntPolynomial sq1 = IntPolynomial({1, 0, 1});
  IntPolynomial power{1};
  for (std::size_t i = 0; i <= k; ++i) {
    out += IntPolynomial::monomial(p.coeff(i), k - i) * power;
    power = power * sq1;
  }
  return out;
}

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coeff(-6, 6);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coeff(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(c);
}

}  // namespace

TEST_CASE("integer parsing and printing") {
  CHECK(parse_integer("-120") == -120);
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK_THROWS_AS(parse_rational("6/-4"), Error);
  CHECK_THROWS_AS(parse_integer("12a"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(to_u64(from_u64(18446744073709551615ull)) == 18446744073709551615ull);
}

TEST_CASE("primality agrees with a sieve") {
  const auto primes = primes_up_to(20000);
  std::vector<bool> sieve(20001, false);
  for (auto p : primes) sieve[p] = true;
  for (std::uint64_t n = 0; n <= 20000; ++n) CHECK(is_prime(n) == sieve[n]);
  CHECK(is_prime(std::uint64_t{2305843009213693951ull}));   // 2^61 - 1
  CHECK_FALSE(is_prime(std::uint64_t{3215031751ull}));      // strong pseudoprime to 2, 3, 5, 7
  CHECK(next_prime(90) == 97);
}

TEST_CASE("factorization and arithmetic helpers") {
  const auto f = factor_u64(360, 1000);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<std::uint64_t, unsigned>{2, 3});
  CHECK(euler_phi(36) == 12);
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(inv_mod(3, 7) == 5);
  CHECK_THROWS_AS(inv_mod(14, 7), Error);
  const auto big = factor_integer(Integer(1000003) * 1000033 * 4, 1000);
  CHECK_FALSE(big.complete);
  CHECK(big.cofactor == Integer(1000003) * 1000033);
  CHECK(factor_integer(Integer(1000003) * 8, 10).complete);  // prime cofactor
  CHECK(is_supported_on(-72, {2, 3}));
  CHECK_FALSE(is_supported_on(30, {2, 3}));
  try {
    factor_u64(1000003ull * 1000033ull, 100);
    FAIL("expected FactorBoundExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FactorBoundExceeded);
  }
}

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial p({-1, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(IntPolynomial({0, 0}).is_zero());
  CHECK((p * p).degree() == 4);
  CHECK(to_string(cyclotomic(6), 'X') == "X^2 - X + 1");
  const auto [q, r] = divmod(to_rational(IntPolynomial({1, 0, 0, 1})), to_rational(IntPolynomial({1, 1})));
  CHECK(r.is_zero());
  CHECK(q == to_rational(IntPolynomial({1, -1, 1})));
  const RatPolynomial a = to_rational(IntPolynomial({-1, 0, 1}));
  const RatPolynomial b = to_rational(IntPolynomial({1, 2, 1}));
  CHECK(gcd(a, b) == to_rational(IntPolynomial({1, 1})));
  const auto eg = extended_gcd(a, b);
  CHECK(eg.s * a + eg.t * b == eg.gcd);
  CHECK(derivative(IntPolynomial({5, 3, 2})) == IntPolynomial({3, 4}));
}

TEST_CASE("cyclotomic examples") {
  CHECK(cyclotomic(1) == IntPolynomial({-1, 1}));
  CHECK(cyclotomic(6) == IntPolynomial({1, -1, 1}));
  CHECK(cyclotomic(8) == IntPolynomial({1, 0, 0, 0, 1}));
  CHECK_THROWS_AS(cyclotomic(0), Error);
}

TEST_CASE("cyclotomic matches the Mobius product oracle and degree phi(n)") {
  for (std::uint64_t n = 1; n <= 120; ++n) {
    const IntPolynomial phi = cyclotomic(n);
    CHECK(phi == oracle::mobius_cyclotomic(n));
    CHECK(static_cast<std::uint64_t>(phi.degree()) == euler_phi(n));
    CHECK(phi.is_monic());
  }
  CHECK(cyclotomic(105).coeff(7) == -2);  // first coefficient outside {-1, 0, 1}
}

TEST_CASE("product of Phi_d over d | n is X^n - 1") {
  for (std::uint64_t n = 1; n <= 150; ++n) {
    IntPolynomial prod{1};
    for (std::uint64_t d : divisors(n)) prod = prod * cyclotomic(d);
    CHECK(prod == IntPolynomial::x_pow_minus_one(n));
  }
}

TEST_CASE("real cyclotomic examples and transform identity") {
  CHECK(real_cyclotomic(3) == IntPolynomial({-1, 1}));
  CHECK(real_cyclotomic(4) == IntPolynomial({-2, 0, 1}));
  CHECK(real_cyclotomic(5) == IntPolynomial({-1, -1, 1}));
  CHECK(real_cyclotomic(6) == IntPolynomial({-3, 0, 1}));
  CHECK_THROWS_AS(real_cyclotomic(2), Error);
  for (std::uint64_t m = 3; m <= 40; ++m) {
    const IntPolynomial psi = real_cyclotomic(m);
    CHECK(static_cast<std::uint64_t>(psi.degree()) * 2 == euler_phi(2 * m));
    CHECK(trace_transform(psi) == cyclotomic(2 * m));
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(IntPolynomial({-2, 1}), IntPolynomial({-5, 1})) == -3);
  CHECK(resultant(IntPolynomial({1, 0, 1}), IntPolynomial({-1, 1})) == 2);
  CHECK(abs(resultant(cyclotomic(6), IntPolynomial::x_pow_minus_one(3))) == 4);
  CHECK(resultant(IntPolynomial({3, 2}), IntPolynomial({5})) == 5);
  CHECK_THROWS_AS(resultant(IntPolynomial(), X()), Error);
}

TEST_CASE("resultant agrees with the Sylvester determinant on random pairs") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPolynomial p = random_poly(rng, 5), q = random_poly(rng, 5);
    const Integer r = resultant(p, q);
    CHECK(r == oracle::sylvester_resultant(p, q));
    const Integer sign = (p.degree() * q.degree()) % 2 ? -1 : 1;
    CHECK(resultant(q, p) == sign * r);
    const bool common = gcd(to_rational(p), to_rational(q)).degree() > 0;
    CHECK((r == 0) == common);
  }
}

TEST_CASE("resultant of split polynomials is the root product") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> root(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> a(3), b(2);
    IntPolynomial p{1}, q{1};
    for (auto& v : a) p = p * IntPolynomial({-(v = root(rng)), 1});
    for (auto& v : b) q = q * IntPolynomial({-(v = root(rng)), 1});
    Integer expect = 1;
    for (int x : a)
      for (int y : b) expect *= x - y;
    CHECK(resultant(p, q) == expect);
  }
}

TEST_CASE("Bezout reduction examples") {
  CHECK(abs(bezout_reduction(6, 1).n_d) == 1);
  CHECK(abs(bezout_reduction(6, 2).n_d) == 3);
  CHECK(abs(bezout_reduction(8, 4).n_d) == 16);
  CHECK_THROWS_AS(bezout_reduction(6, 4), Error);
  CHECK_THROWS_AS(bezout_reduction(6, 6), Error);
  CHECK(modulus_bound(4).modulus == 4);
  CHECK(modulus_bound(6).modulus == 12);
  CHECK(modulus_bound(8).modulus == 16);
  CHECK(modulus_bound_value(8) == 16);
}

TEST_CASE("Bezout identities hold exactly for n <= 60") {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const CyclotomicBezout b = modulus_bound(n);
    CHECK(b.modulus > 0);
    CHECK(b.modulus == modulus_bound_value(n));
    for (const auto& e : b.entries) {
      CHECK(e.n_d != 0);
      CHECK(e.a * cyclotomic(n) + e.b * IntPolynomial::x_pow_minus_one(e.d) == IntPolynomial::constant(e.n_d));
      CHECK(b.modulus % e.n_d == 0);
      CHECK(abs(e.n_d) == abs(oracle::sylvester_resultant(cyclotomic(n), IntPolynomial::x_pow_minus_one(e.d))));
    }
  }
}
