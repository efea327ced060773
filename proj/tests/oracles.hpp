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

#pragma once

// Slow, independent reference implementations used to check the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "finq/galois_field.hpp"
#include "finq/integer.hpp"
#include "finq/number_field.hpp"
#include "finq/polynomial.hpp"
#include "finq/psl2.hpp"

namespace oracle {

using finq::Integer;
using finq::IntPolynomial;
using finq::Rational;

// Determinant by Bareiss fraction-free elimination.
inline Integer bareiss_det(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Res(P, Q) = det of the Sylvester matrix.
inline Integer sylvester_resultant(const IntPolynomial& p, const IntPolynomial& q) {
  const int dp = p.degree(), dq = q.degree();
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
  for (int r = 0; r < dq; ++r) {
    for (int i = 0; i <= dp; ++i) m[r][r + i] = p.coeff(static_cast<std::size_t>(dp - i));
  }
  for (int r = 0; r < dp; ++r) {
    for (int i = 0; i <= dq; ++i) m[dq + r][r + i] = q.coeff(static_cast<std::size_t>(dq - i));
  }
  return bareiss_det(std::move(m));
}

// Schoolbook long division by a monic integer divisor; quotient only when exact.
inline std::optional<IntPolynomial> exact_divide(const IntPolynomial& num, const IntPolynomial& den) {
  std::vector<Integer> r = num.coefficients();
  const int dd = den.degree();
  if (num.degree() < dd) return num.is_zero() ? std::optional(IntPolynomial()) : std::nullopt;
  std::vector<Integer> q(static_cast<std::size_t>(num.degree() - dd + 1), 0);
  for (int i = num.degree(); i >= dd; --i) {
    const Integer c = r[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= c * den.coeff(static_cast<std::size_t>(j));
  }
  for (const auto& v : r) {
    if (v != 0) return std::nullopt;
  }
  return IntPolynomial(q);
}

inline int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

// Phi_n = prod_{d | n} (X^d - 1)^mu(n/d).
inline IntPolynomial mobius_cyclotomic(std::uint64_t n) {
  IntPolynomial num{1}, den{1};
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = mobius(n / d);
    if (mu == 1) num = num * IntPolynomial::x_pow_minus_one(d);
    if (mu == -1) den = den * IntPolynomial::x_pow_minus_one(d);
  }
  // X^d - 1 is monic up to sign of the constant term; den is monic.
  return *exact_divide(num, den);
}

inline finq::Mat2<finq::FFElement> mul(const finq::Mat2<finq::FFElement>& x, const finq::Mat2<finq::FFElement>& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline bool plus_minus_identity(const finq::Mat2<finq::FFElement>& g) {
  const auto& k = g.a.field();
  return g.b.is_zero() && g.c.is_zero() && g.a == g.d && (g.a == k.one() || g.a == -k.one());
}

// Least k >= 1 with g^k = +-I, by repeated multiplication.
inline std::uint64_t brute_psl2_order(const finq::Mat2<finq::FFElement>& g, std::uint64_t limit = 1u << 22) {
  finq::Mat2<finq::FFElement> acc = g;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (plus_minus_identity(acc)) return k;
    acc = mul(acc, g);
  }
  return 0;
}

inline std::uint64_t brute_mult_order(const finq::FFElement& a) {
  finq::FFElement acc = a;
  for (std::uint64_t k = 1; k <= a.field().order(); ++k) {
    if (acc.is_one()) return k;
    acc *= a;
  }
  return 0;
}

// Monic f over F_p (coefficients in [0, p)) is irreducible iff no monic
// polynomial of degree 1..deg/2 divides it; checked by enumeration.
inline bool brute_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  const std::size_t d = f.size() - 1;
  if (d <= 1) return d == 1;
  for (std::size_t e = 1; e <= d / 2; ++e) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint64_t> g(e + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < e; ++i, v /= p) g[i] = v % p;
      g[e] = 1;
      std::vector<std::uint64_t> r = f;
      for (std::size_t i = d; i >= e; --i) {
        const std::uint64_t c = r[i] % p;
        for (std::size_t j = 0; j <= e; ++j) r[i - e + j] = (r[i - e + j] + p * p - (c * g[j]) % p) % p;
        if (i == e) break;
      }
      bool zero = true;
      for (std::size_t i = 0; i < e; ++i) zero = zero && r[i] % p == 0;
      if (zero) return false;
    }
  }
  return true;
}

// Integer supported on S, by trial division.
inline bool supported(Integer n, const std::vector<std::uint64_t>& s) {
  if (n == 0) return false;
  n = abs(n);
  for (std::uint64_t p : s) {
    const Integer q = finq::from_u64(p);
    while (n % q == 0) n /= q;
  }
  return n == 1;
}

// Unit of Z[1/S] or of Z[x][1/S] for a monogenic quadratic ring: S-integral
// coordinates and an S-unit norm a^2 - a*b*c1 + b^2*c0.
inline bool s_unit(const finq::NFElement& x, const std::vector<std::uint64_t>& s) {
  for (const auto& c : x.coeffs()) {
    if (!supported(c.get_den(), s)) return false;
  }
  Rational norm;
  if (x.field().degree() == 1) {
    norm = x.coeffs()[0];
  } else {
    const auto& f = x.field().defining_polynomial();
    const Rational a = x.coeffs()[0], b = x.coeffs()[1];
    norm = a * a - a * b * Rational(f.coeff(1)) + b * b * Rational(f.coeff(0));
  }
  return norm != 0 && supported(norm.get_num(), s) && supported(norm.get_den(), s);
}

// Rational u with u and 1 - u both S-units for |S| <= 2, via coprime
// S-integer triples a + b = c; with two primes one of a, b, c is 1.
inline std::set<Rational> triple_sunits(const std::vector<std::uint64_t>& s, std::uint64_t limit = 1000000) {
  std::vector<Integer> smooth{1};
  for (std::size_t i = 0; i < smooth.size(); ++i) {
    for (std::uint64_t p : s) {
      const Integer next = smooth[i] * finq::from_u64(p);
      if (next <= finq::from_u64(limit) &&
          std::find(smooth.begin(), smooth.end(), next) == smooth.end())
        smooth.push_back(next);
    }
  }
  std::set<Rational> out;
  for (const Integer& x : smooth) {
    // 1 + x = y with y smooth.
    if (std::find(smooth.begin(), smooth.end(), x + 1) == smooth.end()) continue;
    const Rational u = Rational(1) / Rational(x + 1);  // 1/(1+x) + x/(1+x) = 1
    const Rational w = 1 - u;
    for (const Rational& v : std::vector<Rational>{u, w, 1 / u, 1 / w, -w / u, -u / w}) out.insert(v);
  }
  return out;
}

}  // namespace oracle
