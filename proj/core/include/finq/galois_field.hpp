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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finq/fp_poly.hpp"
#include "finq/integer.hpp"
#include "finq/polynomial.hpp"

namespace finq {

class FFElement;

/// F_q = F_p[x]/(factor) with q = p^d < 2^64. Cheap to copy; copies share
/// the same immutable description.
class FiniteField {
 public:
  /// Throws CompositeModulus or ReducibleFactor. `factor` is reduced mod p and
  /// made monic before the irreducibility check.
  static FiniteField make(std::uint64_t p, const IntPolynomial& factor);
  static FiniteField prime_field(std::uint64_t p);

  std::uint64_t characteristic() const { return data_->p; }
  unsigned degree() const { return data_->degree; }
  std::uint64_t order() const { return data_->q; }
  IntPolynomial modulus() const { return fp::to_int(data_->modulus); }
  const fp::Coeffs& modulus_coeffs() const { return data_->modulus; }

  FFElement zero() const;
  FFElement one() const;
  FFElement from_integer(const Integer& value) const;
  FFElement from_u64(std::uint64_t value) const;
  /// Any polynomial in x over F_p, reduced modulo the defining factor.
  FFElement element(const fp::Coeffs& poly) const;
  FFElement generator() const;

  /// Fixed enumeration of F_q: index i in [0, q) has the base-p digits of i as
  /// coefficients, lowest digit first.
  FFElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FFElement& element) const;

  friend bool operator==(const FiniteField& lhs, const FiniteField& rhs);

 private:
  struct Data {
    std::uint64_t p = 0;
    unsigned degree = 0;
    std::uint64_t q = 0;
    fp::Coeffs modulus;  // monic, degree `degree`
  };

  explicit FiniteField(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend class FFElement;
};

class FFElement {
 public:
  const FiniteField& field() const { return field_; }
  /// Exactly field().degree() coefficients, low to high.
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  FFElement operator-() const;
  FFElement& operator+=(const FFElement& rhs);
  FFElement& operator-=(const FFElement& rhs);
  FFElement& operator*=(const FFElement& rhs);
  FFElement& operator/=(const FFElement& rhs) { return *this *= rhs.inverse(); }

  friend FFElement operator+(FFElement lhs, const FFElement& rhs) { return lhs += rhs; }
  friend FFElement operator-(FFElement lhs, const FFElement& rhs) { return lhs -= rhs; }
  friend FFElement operator*(FFElement lhs, const FFElement& rhs) { return lhs *= rhs; }
  friend FFElement operator/(FFElement lhs, const FFElement& rhs) { return lhs /= rhs; }

  /// Throws ZeroElement for 0.
  FFElement inverse() const;
  FFElement pow(std::uint64_t exp) const;
  FFElement pow(const Integer& exp) const;

  friend bool operator==(const FFElement& lhs, const FFElement& rhs) {
    return lhs.c_ == rhs.c_ && lhs.field_ == rhs.field_;
  }

 private:
  FFElement(FiniteField field, std::vector<std::uint64_t> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {}

  FiniteField field_;
  std::vector<std::uint64_t> c_;

  friend class FiniteField;
};

/// "3" for prime-field elements, otherwise the residue polynomial, e.g. "2*x + 5".
std::string to_string(const FFElement& element);

/// Value of an integer polynomial at a field element.
FFElement evaluate(const IntPolynomial& poly, const FFElement& at);

/// Least k >= 1 with a^k = 1, from the factorization of q - 1.
/// Throws ZeroElement, or FactorBoundExceeded when q - 1 cannot be factored.
std::uint64_t ff_mult_order(const FFElement& a, std::uint64_t factor_bound = default_factor_bound());

/// First element of exact multiplicative order n in the enumeration order of
/// FiniteField::element_at, or nothing when n does not divide q - 1.
std::optional<FFElement> ff_element_of_order(const FiniteField& field, std::uint64_t n);

/// A square root when one exists (Tonelli-Shanks; odd characteristic only,
/// in characteristic 2 every element is a square and the root is a^(q/2)).
std::optional<FFElement> ff_sqrt(const FFElement& a);

struct FpFactor {
  IntPolynomial factor;  // monic, coefficients in [0, p)
  unsigned multiplicity = 0;
};

/// Factorization of P mod p. Throws CompositeModulus when p is not prime and
/// InvalidArgument when P vanishes mod p.
std::vector<FpFactor> ff_poly_factor(const IntPolynomial& poly, std::uint64_t p);

}  // namespace finq
