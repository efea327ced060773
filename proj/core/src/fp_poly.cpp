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

#include "finq/fp_poly.hpp"

#include <algorithm>
#include <random>

#include "finq/error.hpp"

namespace finq::fp {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

Coeffs exact_div(const Coeffs& a, const Coeffs& b, std::uint64_t p) { return divmod(a, b, p).first; }

Coeffs pth_root(const Coeffs& f, std::uint64_t p) {
  Coeffs out;
  for (std::size_t i = 0; i < f.size(); i += p) out.push_back(f[i]);
  trim(out);
  return out;
}

void squarefree_parts(const Coeffs& f, std::uint64_t p, unsigned scale,
                      std::vector<std::pair<Coeffs, unsigned>>& out) {
  const Coeffs fd = derivative(f, p);
  if (fd.empty()) {
    squarefree_parts(pth_root(f, p), p, scale * static_cast<unsigned>(p), out);
    return;
  }
  Coeffs c = gcd(f, fd, p);
  Coeffs w = exact_div(f, c, p);
  unsigned i = 1;
  while (degree(w) > 0) {
    Coeffs y = gcd(w, c, p);
    Coeffs fac = exact_div(w, y, p);
    if (degree(fac) > 0) out.emplace_back(std::move(fac), i * scale);
    c = exact_div(c, y, p);
    w = std::move(y);
    ++i;
  }
  if (degree(c) > 0) squarefree_parts(pth_root(c, p), p, scale * static_cast<unsigned>(p), out);
}

std::vector<std::pair<Coeffs, unsigned>> distinct_degree(const Coeffs& f, std::uint64_t p) {
  std::vector<std::pair<Coeffs, unsigned>> out;
  Coeffs rest = f;
  Coeffs h = mod(x(), rest, p);
  unsigned i = 1;
  while (degree(rest) >= 2 * static_cast<int>(i)) {
    h = pow_mod(h, from_u64(p), rest, p);
    Coeffs g = gcd(rest, sub(h, x(), p), p);
    if (degree(g) > 0) {
      rest = exact_div(rest, g, p);
      h = mod(h, rest, p);
      out.emplace_back(std::move(g), i);
    }
    ++i;
  }
  if (degree(rest) > 0) out.emplace_back(rest, static_cast<unsigned>(degree(rest)));
  return out;
}

void equal_degree(const Coeffs& g, unsigned d, std::uint64_t p, std::mt19937_64& rng, std::vector<Coeffs>& out) {
  if (degree(g) == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const std::size_t n = static_cast<std::size_t>(degree(g));
  Integer half_exp;
  if (p != 2) {
    Integer q;
    mpz_pow_ui(q.get_mpz_t(), from_u64(p).get_mpz_t(), d);
    half_exp = (q - 1) / 2;
  }
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    Coeffs a(n);
    for (auto& v : a) v = coeff(rng);
    trim(a);
    if (degree(a) <= 0) continue;
    Coeffs b;
    if (p != 2) {
      b = sub(pow_mod(a, half_exp, g, p), Coeffs{1}, p);
    } else {
      b = a;
      Coeffs t = a;
      for (unsigned j = 1; j < d; ++j) {
        t = mod(mul(t, t, p), g, p);
        b = add(b, t, p);
      }
    }
    Coeffs f = gcd(g, b, p);
    if (degree(f) > 0 && degree(f) < degree(g)) {
      equal_degree(f, d, p, rng, out);
      equal_degree(exact_div(g, f, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

Coeffs from_int(const IntPolynomial& poly, std::uint64_t p) {
  Coeffs out;
  out.reserve(poly.coefficients().size());
  for (const auto& c : poly.coefficients()) out.push_back(reduce_mod(c, p));
  trim(out);
  return out;
}

IntPolynomial to_int(const Coeffs& poly) {
  std::vector<Integer> c;
  c.reserve(poly.size());
  for (auto v : poly) c.push_back(finq::from_u64(v));
  return IntPolynomial(std::move(c));
}

void trim(Coeffs& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

Coeffs add(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = add_mod(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(out);
  return out;
}

Coeffs sub(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = sub_mod(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(out);
  return out;
}

Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], p), p);
  }
  trim(out);
  return out;
}

Coeffs scale(const Coeffs& a, std::uint64_t s, std::uint64_t p) {
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul_mod(a[i], s, p);
  trim(out);
  return out;
}

std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  if (b.empty()) fail(ErrorKind::InvalidArgument, "polynomial division by zero mod p");
  if (a.size() < b.size()) return {Coeffs{}, a};
  Coeffs rem = a;
  const std::size_t db = b.size() - 1;
  Coeffs quo(a.size() - db, 0);
  const std::uint64_t inv_lead = inv_mod(b.back(), p);
  for (std::size_t i = a.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const std::uint64_t q = mul_mod(rem[i], inv_lead, p);
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = sub_mod(rem[i - db + j], mul_mod(q, b[j], p), p);
  }
  trim(quo);
  trim(rem);
  return {std::move(quo), std::move(rem)};
}

Coeffs mod(const Coeffs& a, const Coeffs& b, std::uint64_t p) { return divmod(a, b, p).second; }

Coeffs monic(const Coeffs& a, std::uint64_t p) {
  if (a.empty() || a.back() == 1) return a;
  return scale(a, inv_mod(a.back(), p), p);
}

Coeffs gcd(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs x0 = a, x1 = b;
  while (!x1.empty()) {
    Coeffs r = mod(x0, x1, p);
    x0 = std::move(x1);
    x1 = std::move(r);
  }
  return monic(x0, p);
}

Coeffs derivative(const Coeffs& a, std::uint64_t p) {
  Coeffs out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mul_mod(a[i], i % p, p));
  trim(out);
  return out;
}

Coeffs pow_mod(const Coeffs& base, const Integer& exp, const Coeffs& modulus, std::uint64_t p) {
  Coeffs result = mod(Coeffs{1}, modulus, p);
  const Coeffs b = mod(base, modulus, p);
  if (exp == 0) return result;
  for (std::size_t bit = mpz_sizeinbase(exp.get_mpz_t(), 2); bit-- > 0;) {
    result = mod(mul(result, result, p), modulus, p);
    if (mpz_tstbit(exp.get_mpz_t(), bit) != 0) result = mod(mul(result, b, p), modulus, p);
  }
  return result;
}

bool is_irreducible(const Coeffs& f, std::uint64_t p) {
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  const Coeffs g = monic(f, p);
  std::vector<Coeffs> frob(static_cast<std::size_t>(n) + 1);  // frob[k] = x^(p^k) mod g
  frob[0] = x();
  const Integer pz = finq::from_u64(p);
  for (int k = 1; k <= n; ++k) frob[static_cast<std::size_t>(k)] = pow_mod(frob[static_cast<std::size_t>(k) - 1], pz, g, p);
  if (frob[static_cast<std::size_t>(n)] != x()) return false;
  for (const auto& [r, e] : factor_u64(static_cast<std::uint64_t>(n), 1000)) {
    (void)e;
    const Coeffs h = sub(frob[static_cast<std::size_t>(n) / r], x(), p);
    if (degree(gcd(g, h, p)) > 0) return false;
  }
  return true;
}

std::vector<std::pair<Coeffs, unsigned>> factor(const Coeffs& f, std::uint64_t p) {
  if (f.empty()) fail(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  std::vector<std::pair<Coeffs, unsigned>> out;
  const Coeffs g = monic(f, p);
  if (degree(g) == 0) return out;

  std::vector<std::pair<Coeffs, unsigned>> parts;
  squarefree_parts(g, p, 1, parts);

  std::mt19937_64 rng(0x5eedf00dULL ^ p);
  for (const auto& [part, mult] : parts) {
    for (const auto& [block, d] : distinct_degree(part, p)) {
      std::vector<Coeffs> irreducibles;
      equal_degree(block, d, p, rng, irreducibles);
      for (auto& h : irreducibles) out.emplace_back(std::move(h), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    if (a.first != b.first) return std::lexicographical_compare(a.first.rbegin(), a.first.rend(), b.first.rbegin(), b.first.rend());
    return a.second < b.second;
  });
  // Identical factors coming from different squarefree parts are merged.
  std::vector<std::pair<Coeffs, unsigned>> merged;
  for (auto& entry : out) {
    if (!merged.empty() && merged.back().first == entry.first) {
      merged.back().second += entry.second;
    } else {
      merged.push_back(std::move(entry));
    }
  }
  return merged;
}

}  // namespace finq::fp
