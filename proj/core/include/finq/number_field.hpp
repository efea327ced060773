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
#include <string>
#include <vector>

#include "finq/error.hpp"
#include "finq/galois_field.hpp"
#include "finq/integer.hpp"
#include "finq/polynomial.hpp"

namespace finq {

class NFElement;

/// Thrown by NumberField::make when the defining polynomial factors over Q.
class ReducibleError : public Error {
 public:
  ReducibleError(const std::string& what, std::vector<IntPolynomial> factors)
      : Error(ErrorKind::Reducible, what), factors_(std::move(factors)) {}

  const std::vector<IntPolynomial>& factors() const { return factors_; }

 private:
  std::vector<IntPolynomial> factors_;
};

/// K = Q[x]/(f) for a monic integer polynomial f.
///
/// Irreducibility is proved when cheap: degree one, absence of integer roots
/// for degrees two and three, incompatible factor degrees modulo three
/// primes not dividing the discriminant, or recombination of the factors
/// modulo one prime above the coefficient bound of a factor (when that prime
/// fits in 61 bits and there are at most 20 modular factors); a recombined
/// factor is reported as ReducibleError. When no proof is found the field is
/// still accepted and marked assumed_irreducible(); nothing downstream relies
/// on irreducibility for soundness, since orders are always checked directly.
class NumberField {
 public:
  /// Throws NotMonic, InvalidArgument (degree < 1) or ReducibleError.
  static NumberField make(const IntPolynomial& f);
  static NumberField rationals();

  const IntPolynomial& defining_polynomial() const { return data_->f; }
  unsigned degree() const { return data_->degree; }
  bool assumed_irreducible() const { return data_->assumed_irreducible; }

  NFElement zero() const;
  NFElement one() const;
  NFElement from_rational(const Rational& value) const;
  /// The class of x.
  NFElement generator() const;
  /// Any polynomial in x with rational coefficients, reduced mod f.
  NFElement element(const std::vector<Rational>& coeffs) const;

  friend bool operator==(const NumberField& lhs, const NumberField& rhs);

 private:
  struct Data {
    IntPolynomial f;
    unsigned degree = 0;
    bool assumed_irreducible = false;
  };

  explicit NumberField(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

class NFElement {
 public:
  const NumberField& field() const { return field_; }
  /// Exactly field().degree() canonical rationals, coefficient of x^i at i.
  const std::vector<Rational>& coeffs() const { return c_; }
  RatPolynomial polynomial() const { return RatPolynomial(c_); }

  bool is_zero() const;
  bool is_rational() const;

  NFElement operator-() const;
  NFElement& operator+=(const NFElement& rhs);
  NFElement& operator-=(const NFElement& rhs);
  NFElement& operator*=(const NFElement& rhs);

  friend NFElement operator+(NFElement lhs, const NFElement& rhs) { return lhs += rhs; }
  friend NFElement operator-(NFElement lhs, const NFElement& rhs) { return lhs -= rhs; }
  friend NFElement operator*(NFElement lhs, const NFElement& rhs) { return lhs *= rhs; }

  /// Throws ZeroElement for 0, Reducible if the element is a zero divisor
  /// (possible only for an assumed-irreducible f that in fact factors).
  NFElement inverse() const;

  friend bool operator==(const NFElement& lhs, const NFElement& rhs) {
    return lhs.c_ == rhs.c_ && lhs.field_ == rhs.field_;
  }

 private:
  NFElement(NumberField field, std::vector<Rational> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {}

  NumberField field_;
  std::vector<Rational> c_;

  friend class NumberField;
};

/// "5", "1/2" or a polynomial in x such as "2*x - 1".
std::string to_string(const NFElement& element);

/// det(Y - mult_t) on the power basis; monic of degree [K:Q].
RatPolynomial nf_charpoly(const NFElement& t);

/// True when no coefficient denominator is divisible by p.
bool reduces_at(const NFElement& t, std::uint64_t p);

/// True when every coefficient denominator is supported on the primes of S.
bool is_s_integral(const NFElement& t, const std::vector<std::uint64_t>& s);

/// A prime above p, realized as an irreducible factor of f mod p.
struct Place {
  NumberField field;
  std::uint64_t p = 0;
  IntPolynomial factor;        // monic, coefficients in [0, p)
  unsigned residue_degree = 0;
  unsigned multiplicity = 1;   // exponent of the factor in f mod p
  bool ramified = false;       // multiplicity > 1
  FiniteField residue_field;
};

/// One place per irreducible factor of f mod p, in ff_poly_factor order.
/// Throws CompositeModulus.
std::vector<Place> nf_places_above(const NumberField& field, std::uint64_t p);

/// The place of `field` above p with this factor; throws InvalidArgument when
/// the factor is not an irreducible factor of f mod p.
Place nf_place(const NumberField& field, std::uint64_t p, const IntPolynomial& factor);

/// Residue map O_p -> k_p. Throws DenominatorAtPlace when a coefficient
/// denominator is divisible by p.
FFElement nf_reduce(const NFElement& t, const Place& place);

}  // namespace finq
