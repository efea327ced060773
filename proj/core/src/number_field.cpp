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

#include "finq/number_field.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <set>

namespace finq {

namespace {

RatPolynomial reduce_mod_f(const RatPolynomial& poly, const IntPolynomial& f) {
  return divmod(poly, to_rational(f)).second;
}

std::vector<Rational> padded(const RatPolynomial& poly, unsigned degree) {
  std::vector<Rational> c = poly.coefficients();
  c.resize(degree, Rational(0));
  return c;
}

/// All positive divisors of |n|, when |n| factors completely below the default bound.
std::optional<std::vector<Integer>> integer_divisors(const Integer& n) {
  const IntegerFactorization fac = factor_integer(n, default_factor_bound());
  if (!fac.complete) return std::nullopt;
  std::vector<Integer> out{Integer(1)};
  for (const auto& [prime, e] : fac.factors) {
    const std::size_t base = out.size();
    Integer pw = 1;
    for (unsigned i = 0; i < e; ++i) {
      pw *= prime;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

std::set<unsigned> factor_degree_sums(const std::vector<std::pair<fp::Coeffs, unsigned>>& factors) {
  std::set<unsigned> sums{0};
  for (const auto& [f, mult] : factors) {
    for (unsigned k = 0; k < mult; ++k) {
      std::set<unsigned> next = sums;
      for (unsigned s : sums) next.insert(s + static_cast<unsigned>(fp::degree(f)));
      sums = std::move(next);
    }
  }
  return sums;
}

// Recombination of modular factors for the smaller half of a factorization.
// A monic integer factor g of degree k <= d/2 has coefficients bounded by
// C(k, k/2) * ||f||_2, so modulo one prime above twice that bound g is the
// symmetric lift of a product of modular factors. Returns true when no subset
// lifts to a factor, nullopt when the bound or the factor count is too large.
std::optional<bool> recombine(const IntPolynomial& f) {
  const int d = f.degree();
  const unsigned k = static_cast<unsigned>(d / 2);
  Integer norm2 = 0;
  for (const Integer& c : f.coefficients()) norm2 += c * c;
  Integer bound = sqrt(norm2) + 1;
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), k, k / 2);
  bound *= binom;
  const Integer limit = Integer(1) << 61;
  if (2 * bound >= limit) return std::nullopt;

  std::uint64_t p = next_prime(to_u64(2 * bound) + 1);
  const IntPolynomial df = derivative(f);
  for (int tries = 0;; p = next_prime(p), ++tries) {
    if (tries > 50) return std::nullopt;
    const fp::Coeffs fm = fp::from_int(f, p);
    if (fp::degree(fp::gcd(fm, fp::from_int(df, p), p)) == 0) break;
  }
  const auto factors = fp::factor(fp::from_int(f, p), p);
  const std::size_t r = factors.size();
  if (r > 20) return std::nullopt;
  if (r == 1) return true;

  const Integer pz = from_u64(p);
  const Integer half = pz / 2;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    fp::Coeffs prod{1};
    for (std::size_t i = 0; i < r; ++i) {
      if (mask & (std::uint64_t{1} << i)) prod = fp::mul(prod, factors[i].first, p);
    }
    if (fp::degree(prod) > static_cast<int>(k)) continue;
    std::vector<Integer> lifted;
    for (std::uint64_t c : prod) {
      Integer v = from_u64(c);
      if (v > half) v -= pz;
      lifted.push_back(v);
    }
    const IntPolynomial g(lifted);
    const auto [q, rem] = divmod(to_rational(f), to_rational(g));
    if (!rem.is_zero()) continue;
    throw ReducibleError(to_string(f, 'x') + " factors over Q", {g, to_integer(q)});
  }
  return true;
}

// Returns true when irreducibility over Q is proven; throws ReducibleError on a
// found factorization; returns false when inconclusive.
bool prove_irreducible(const IntPolynomial& f) {
  const int d = f.degree();
  if (d == 1) return true;
  const IntPolynomial x_poly{Integer(0), Integer(1)};
  if (f.coeff(0) == 0) {
    throw ReducibleError(to_string(f, 'x') + " is divisible by x", {x_poly, exact_quotient(f, x_poly)});
  }
  bool roots_excluded = false;
  if (auto divs = integer_divisors(f.coeff(0))) {
    for (const Integer& r : *divs) {
      for (const Integer& root : {Integer(r), Integer(-r)}) {
        if (f(root) == 0) {
          const IntPolynomial lin{Integer(-root), Integer(1)};
          throw ReducibleError(to_string(f, 'x') + " has the rational root " + to_string(root),
                               {lin, exact_quotient(f, lin)});
        }
      }
    }
    roots_excluded = true;
  }
  if (roots_excluded && d <= 3) return true;

  const IntPolynomial df = derivative(f);
  std::set<unsigned> possible;
  for (unsigned s = 0; s <= static_cast<unsigned>(d); ++s) possible.insert(s);
  unsigned good = 0;
  for (std::uint64_t p = 2; good < 3 && p < 1000; p = next_prime(p)) {
    const fp::Coeffs fm = fp::from_int(f, p);
    if (fp::degree(fp::gcd(fm, fp::from_int(df, p), p)) > 0) continue;
    ++good;
    std::set<unsigned> sums = factor_degree_sums(fp::factor(fm, p));
    std::set<unsigned> both;
    std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(), std::inserter(both, both.end()));
    possible = std::move(both);
    if (possible.size() == 2) return true;  // only {0, d}
  }
  return recombine(f).value_or(false);
}

}  // namespace

NumberField NumberField::make(const IntPolynomial& f) {
  if (f.degree() < 1) fail(ErrorKind::InvalidArgument, "defining polynomial must have degree >= 1");
  if (!f.is_monic()) fail(ErrorKind::NotMonic, "defining polynomial " + to_string(f, 'x') + " is not monic");
  auto data = std::make_shared<Data>();
  data->f = f;
  data->degree = static_cast<unsigned>(f.degree());
  data->assumed_irreducible = !prove_irreducible(f);
  return NumberField(std::move(data));
}

NumberField NumberField::rationals() { return make(IntPolynomial{Integer(0), Integer(1)}); }

bool operator==(const NumberField& lhs, const NumberField& rhs) {
  return lhs.data_ == rhs.data_ || lhs.data_->f == rhs.data_->f;
}

NFElement NumberField::zero() const { return NFElement(*this, std::vector<Rational>(degree(), Rational(0))); }

NFElement NumberField::one() const { return from_rational(1); }

NFElement NumberField::from_rational(const Rational& value) const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = value;
  return NFElement(*this, std::move(c));
}

NFElement NumberField::generator() const { return element({Rational(0), Rational(1)}); }

NFElement NumberField::element(const std::vector<Rational>& coeffs) const {
  std::vector<Rational> c = coeffs;
  for (auto& v : c) v.canonicalize();
  return NFElement(*this, padded(reduce_mod_f(RatPolynomial(std::move(c)), data_->f), degree()));
}

bool NFElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v == 0; });
}

bool NFElement::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& v) { return v == 0; });
}

NFElement NFElement::operator-() const {
  NFElement out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

NFElement& NFElement::operator+=(const NFElement& rhs) {
  if (!(field_ == rhs.field_)) fail(ErrorKind::InvalidArgument, "number field elements from different fields");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

NFElement& NFElement::operator-=(const NFElement& rhs) {
  if (!(field_ == rhs.field_)) fail(ErrorKind::InvalidArgument, "number field elements from different fields");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

NFElement& NFElement::operator*=(const NFElement& rhs) {
  if (!(field_ == rhs.field_)) fail(ErrorKind::InvalidArgument, "number field elements from different fields");
  if (c_.size() == 1) {
    c_[0] *= rhs.c_[0];
    return *this;
  }
  c_ = padded(reduce_mod_f(polynomial() * rhs.polynomial(), field_.defining_polynomial()), field_.degree());
  return *this;
}

NFElement NFElement::inverse() const {
  if (is_zero()) fail(ErrorKind::ZeroElement, "zero has no inverse");
  if (c_.size() == 1) return field_.from_rational(1 / c_[0]);
  const ExtendedGcd eg = extended_gcd(polynomial(), to_rational(field_.defining_polynomial()));
  if (eg.gcd.degree() != 0)
    fail(ErrorKind::Reducible, "element " + to_string(*this) + " is a zero divisor; defining polynomial factors");
  return NFElement(field_, padded(reduce_mod_f(eg.s, field_.defining_polynomial()), field_.degree()));
}

std::string to_string(const NFElement& element) { return to_string(element.polynomial(), 'x'); }

RatPolynomial nf_charpoly(const NFElement& t) {
  const NumberField& field = t.field();
  const std::size_t n = field.degree();
  // Column j of the multiplication matrix holds t * x^j.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  NFElement basis = field.one();
  const NFElement x = field.generator();
  for (std::size_t j = 0; j < n; ++j) {
    const NFElement col = t * basis;
    for (std::size_t i = 0; i < n; ++i) a[i][j] = col.coeffs()[i];
    basis *= x;
  }
  // Faddeev-LeVerrier.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> am(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) am[i][j] += a[i][l] * m[l][j];
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return RatPolynomial(std::move(c));
}

bool reduces_at(const NFElement& t, std::uint64_t p) {
  return std::all_of(t.coeffs().begin(), t.coeffs().end(),
                     [p](const Rational& v) { return reduce_mod(v.get_den(), p) != 0; });
}

bool is_s_integral(const NFElement& t, const std::vector<std::uint64_t>& s) {
  return std::all_of(t.coeffs().begin(), t.coeffs().end(),
                     [&s](const Rational& v) { return is_supported_on(v.get_den(), s); });
}

std::vector<Place> nf_places_above(const NumberField& field, std::uint64_t p) {
  std::vector<Place> out;
  for (auto& [factor, mult] : ff_poly_factor(field.defining_polynomial(), p)) {
    FiniteField residue = FiniteField::make(p, factor);
    out.push_back(Place{field, p, factor, static_cast<unsigned>(factor.degree()), mult, mult > 1, std::move(residue)});
  }
  return out;
}

Place nf_place(const NumberField& field, std::uint64_t p, const IntPolynomial& factor) {
  for (auto& place : nf_places_above(field, p)) {
    if (place.factor == factor) return place;
  }
  fail(ErrorKind::InvalidArgument,
       to_string(factor, 'x') + " is not an irreducible factor of the defining polynomial mod " + std::to_string(p));
}

FFElement nf_reduce(const NFElement& t, const Place& place) {
  if (!(t.field() == place.field)) fail(ErrorKind::InvalidArgument, "element and place belong to different fields");
  fp::Coeffs coeffs;
  coeffs.reserve(t.coeffs().size());
  for (const Rational& v : t.coeffs()) {
    const std::uint64_t den = reduce_mod(v.get_den(), place.p);
    if (den == 0)
      fail(ErrorKind::DenominatorAtPlace,
           to_string(t) + " has a denominator divisible by " + std::to_string(place.p));
    coeffs.push_back(mul_mod(reduce_mod(v.get_num(), place.p), inv_mod(den, place.p), place.p));
  }
  return place.residue_field.element(coeffs);
}

}  // namespace finq
