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

#include "finq/galois_field.hpp"

#include <limits>
#include <sstream>

#include "finq/error.hpp"

namespace finq {

namespace {

void require_same_field(const FiniteField& a, const FiniteField& b) {
  if (!(a == b)) fail(ErrorKind::InvalidArgument, "finite field elements from different fields");
}

}  // namespace

FiniteField FiniteField::make(std::uint64_t p, const IntPolynomial& factor) {
  if (!is_prime(p)) fail(ErrorKind::CompositeModulus, std::to_string(p) + " is not prime");
  fp::Coeffs modulus = fp::monic(fp::from_int(factor, p), p);
  if (fp::degree(modulus) < 1)
    fail(ErrorKind::ReducibleFactor, "defining factor " + to_string(factor, 'x') + " is constant mod " + std::to_string(p));
  if (!fp::is_irreducible(modulus, p))
    fail(ErrorKind::ReducibleFactor, to_string(factor, 'x') + " is reducible mod " + std::to_string(p));
  auto data = std::make_shared<Data>();
  data->p = p;
  data->degree = static_cast<unsigned>(fp::degree(modulus));
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < data->degree; ++i) {
    q *= p;
    if (q > std::numeric_limits<std::uint64_t>::max())
      fail(ErrorKind::InvalidArgument, "field order p^d must stay below 2^64");
  }
  data->q = static_cast<std::uint64_t>(q);
  data->modulus = std::move(modulus);
  return FiniteField(std::move(data));
}

FiniteField FiniteField::prime_field(std::uint64_t p) { return make(p, IntPolynomial{Integer(0), Integer(1)}); }

bool operator==(const FiniteField& lhs, const FiniteField& rhs) {
  if (lhs.data_ == rhs.data_) return true;
  return lhs.data_->p == rhs.data_->p && lhs.data_->modulus == rhs.data_->modulus;
}

FFElement FiniteField::zero() const { return FFElement(*this, std::vector<std::uint64_t>(degree(), 0)); }

FFElement FiniteField::one() const {
  std::vector<std::uint64_t> c(degree(), 0);
  c[0] = 1;
  return FFElement(*this, std::move(c));
}

FFElement FiniteField::from_integer(const Integer& value) const {
  std::vector<std::uint64_t> c(degree(), 0);
  c[0] = reduce_mod(value, characteristic());
  return FFElement(*this, std::move(c));
}

FFElement FiniteField::from_u64(std::uint64_t value) const {
  std::vector<std::uint64_t> c(degree(), 0);
  c[0] = value % characteristic();
  return FFElement(*this, std::move(c));
}

FFElement FiniteField::element(const fp::Coeffs& poly) const {
  fp::Coeffs reduced;
  reduced.reserve(poly.size());
  for (auto v : poly) reduced.push_back(v % characteristic());
  fp::trim(reduced);
  reduced = fp::mod(reduced, data_->modulus, characteristic());
  reduced.resize(degree(), 0);
  return FFElement(*this, std::move(reduced));
}

FFElement FiniteField::generator() const { return element(fp::x()); }

FFElement FiniteField::element_at(std::uint64_t index) const {
  if (index >= order()) fail(ErrorKind::InvalidArgument, "element index out of range");
  std::vector<std::uint64_t> c(degree(), 0);
  for (unsigned i = 0; i < degree(); ++i) {
    c[i] = index % characteristic();
    index /= characteristic();
  }
  return FFElement(*this, std::move(c));
}

std::uint64_t FiniteField::index_of(const FFElement& element) const {
  require_same_field(*this, element.field());
  std::uint64_t index = 0;
  for (unsigned i = degree(); i-- > 0;) index = index * characteristic() + element.coeffs()[i];
  return index;
}

bool FFElement::is_zero() const {
  for (auto v : c_) {
    if (v != 0) return false;
  }
  return true;
}

bool FFElement::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

FFElement FFElement::operator-() const {
  FFElement out = *this;
  const std::uint64_t p = field_.characteristic();
  for (auto& v : out.c_) v = v == 0 ? 0 : p - v;
  return out;
}

FFElement& FFElement::operator+=(const FFElement& rhs) {
  require_same_field(field_, rhs.field_);
  const std::uint64_t p = field_.characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const std::uint64_t s = c_[i] + rhs.c_[i];
    c_[i] = (s >= p || s < c_[i]) ? s - p : s;
  }
  return *this;
}

FFElement& FFElement::operator-=(const FFElement& rhs) {
  require_same_field(field_, rhs.field_);
  const std::uint64_t p = field_.characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= rhs.c_[i] ? c_[i] - rhs.c_[i] : c_[i] + (p - rhs.c_[i]);
  return *this;
}

FFElement& FFElement::operator*=(const FFElement& rhs) {
  require_same_field(field_, rhs.field_);
  const std::uint64_t p = field_.characteristic();
  const std::size_t d = c_.size();
  if (d == 1) {
    c_[0] = mul_mod(c_[0], rhs.c_[0], p);
    return *this;
  }
  std::vector<std::uint64_t> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      const std::uint64_t t = mul_mod(c_[i], rhs.c_[j], p);
      std::uint64_t& slot = prod[i + j];
      slot = slot >= p - t ? slot - (p - t) : slot + t;
    }
  }
  const auto& m = field_.modulus_coeffs();
  for (std::size_t i = 2 * d - 1; i-- > d;) {
    const std::uint64_t top = prod[i];
    if (top == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      const std::uint64_t t = mul_mod(top, m[j], p);
      std::uint64_t& slot = prod[i - d + j];
      slot = slot >= t ? slot - t : slot + (p - t);
    }
    prod[i] = 0;
  }
  prod.resize(d);
  c_ = std::move(prod);
  return *this;
}

FFElement FFElement::inverse() const {
  if (is_zero()) fail(ErrorKind::ZeroElement, "zero has no inverse");
  if (c_.size() == 1) {
    FFElement out = *this;
    out.c_[0] = inv_mod(c_[0], field_.characteristic());
    return out;
  }
  return pow(field_.order() - 2);
}

FFElement FFElement::pow(std::uint64_t exp) const {
  FFElement result = field_.one();
  FFElement base = *this;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

FFElement FFElement::pow(const Integer& exp) const {
  if (exp < 0) return inverse().pow(Integer(-exp));
  if (fits_u64(exp)) return pow(to_u64(exp));
  FFElement result = field_.one();
  for (std::size_t bit = mpz_sizeinbase(exp.get_mpz_t(), 2); bit-- > 0;) {
    result *= result;
    if (mpz_tstbit(exp.get_mpz_t(), bit) != 0) result *= *this;
  }
  return result;
}

std::string to_string(const FFElement& element) {
  const auto& c = element.coeffs();
  if (c.size() == 1) return std::to_string(c[0]);
  return to_string(fp::to_int(fp::Coeffs(c.begin(), c.end())), 'x');
}

FFElement evaluate(const IntPolynomial& poly, const FFElement& at) {
  const FiniteField& field = at.field();
  FFElement acc = field.zero();
  const auto& c = poly.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + field.from_integer(*it);
  return acc;
}

std::uint64_t ff_mult_order(const FFElement& a, std::uint64_t factor_bound) {
  if (a.is_zero()) fail(ErrorKind::ZeroElement, "zero has no multiplicative order");
  std::uint64_t order = a.field().order() - 1;
  if (order == 0) return 1;
  for (const auto& [r, e] : factor_u64(order, factor_bound)) {
    for (unsigned i = 0; i < e; ++i) {
      if (!a.pow(order / r).is_one()) break;
      order /= r;
    }
  }
  return order;
}

std::optional<FFElement> ff_element_of_order(const FiniteField& field, std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "multiplicative order must be positive");
  const std::uint64_t group = field.order() - 1;
  if (group % n != 0) return std::nullopt;
  const auto primes = factor_u64(n, default_factor_bound());
  for (std::uint64_t i = 1; i < field.order(); ++i) {
    FFElement a = field.element_at(i);
    if (!a.pow(n).is_one()) continue;
    bool exact = true;
    for (const auto& [r, e] : primes) {
      (void)e;
      if (a.pow(n / r).is_one()) {
        exact = false;
        break;
      }
    }
    if (exact) return a;
  }
  return std::nullopt;
}

std::optional<FFElement> ff_sqrt(const FFElement& a) {
  const FiniteField& field = a.field();
  if (a.is_zero()) return a;
  const std::uint64_t q = field.order();
  if (field.characteristic() == 2) return a.pow(q / 2);
  if (!a.pow((q - 1) / 2).is_one()) return std::nullopt;

  std::uint64_t odd = q - 1;
  unsigned twos = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }
  FFElement z = field.one();
  for (std::uint64_t i = 2; i < q; ++i) {
    z = field.element_at(i);
    if (!z.pow((q - 1) / 2).is_one()) break;
  }
  unsigned m = twos;
  FFElement c = z.pow(odd);
  FFElement t = a.pow(odd);
  FFElement r = a.pow((odd + 1) / 2);
  while (!t.is_one()) {
    unsigned i = 0;
    FFElement probe = t;
    while (!probe.is_one()) {
      probe *= probe;
      ++i;
    }
    FFElement b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    m = i;
    c = b * b;
    t *= c;
    r *= b;
  }
  return r;
}

std::vector<FpFactor> ff_poly_factor(const IntPolynomial& poly, std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::CompositeModulus, std::to_string(p) + " is not prime");
  const fp::Coeffs reduced = fp::from_int(poly, p);
  if (reduced.empty()) fail(ErrorKind::InvalidArgument, "polynomial vanishes mod " + std::to_string(p));
  std::vector<FpFactor> out;
  for (auto& [f, mult] : fp::factor(reduced, p)) out.push_back(FpFactor{fp::to_int(f), mult});
  return out;
}

}  // namespace finq
