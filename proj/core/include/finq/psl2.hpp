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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finq/galois_field.hpp"
#include "finq/number_field.hpp"

namespace finq {

/// [[a, b], [c, d]] over NFElement or FFElement. PSL2 classes are handled as
/// SL2 representatives compared up to sign; no quotient type is materialized.
template <class T>
struct Mat2 {
  T a, b, c, d;

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }

  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  /// Inverse of a determinant-one matrix.
  Mat2 sl2_inverse() const { return {d, -b, -c, a}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2<NFElement> identity(const NumberField& field);
Mat2<FFElement> identity(const FiniteField& field);

/// [[t, -1], [1, 0]], the canonical determinant-one matrix of trace t.
Mat2<NFElement> companion(const NFElement& trace);
Mat2<FFElement> companion(const FFElement& trace);

bool is_unimodular(const Mat2<NFElement>& g);
bool is_unimodular(const Mat2<FFElement>& g);

bool is_plus_minus_identity(const Mat2<NFElement>& g);
bool is_plus_minus_identity(const Mat2<FFElement>& g);

template <class T>
Mat2<T> power(Mat2<T> base, std::uint64_t exp, Mat2<T> one) {
  while (exp != 0) {
    if (exp & 1U) one = one * base;
    exp >>= 1U;
    if (exp != 0) base = base * base;
  }
  return one;
}

Mat2<FFElement> power(const Mat2<FFElement>& g, std::uint64_t exp);

/// A group given by generators in SL2(O_{K,S}).
struct GroupPreset {
  std::string label;
  NumberField field;
  std::vector<std::uint64_t> s;  // sorted rational primes
  std::vector<std::pair<std::string, Mat2<NFElement>>> generators;

  /// Validates S (primes), determinants and S-integrality of every entry.
  /// Throws InvalidArgument or NotUnimodular.
  static GroupPreset make(std::string label, NumberField field, std::vector<std::uint64_t> s,
                          std::vector<std::pair<std::string, Mat2<NFElement>>> generators);

  /// Throws UnknownGenerator.
  const Mat2<NFElement>& generator(std::string_view name) const;
};

struct WordLetter {
  std::string name;
  std::int64_t exponent = 1;  // never zero

  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};

/// Product of generator powers, left to right. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<WordLetter> letters);

  /// Letters separated by blanks or '*', each `name` or `name^k`, e.g.
  /// "a b a^-1 b^-1". Throws Parse.
  static Word parse(std::string_view text);

  const std::vector<WordLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<WordLetter> letters_;
};

std::string to_string(const Word& word);

/// Exact product in SL2(K). Throws UnknownGenerator.
Mat2<NFElement> word_eval(const GroupPreset& preset, const Word& word);

/// Entrywise residue map at the place. Throws DenominatorAtPlace naming the entry.
Mat2<FFElement> mat_reduce(const Mat2<NFElement>& g, const Place& place);

/// Order of [g] in PSL2(F_q).
///
/// +-I has order 1 and any other element of trace +-2 has order p. Otherwise
/// the order of [g] is derived from the multiplicative order r of an
/// eigenvalue (r if odd, r/2 if even), computed as the order of Y in
/// F_q[Y]/(Y^2 - trace*Y + 1): a field isomorphic to F_q^2 when the
/// characteristic polynomial is irreducible, and F_q x F_q when it splits.
/// For q <= 10^4 the result is also checked by powering. Throws NotUnimodular,
/// or FactorBoundExceeded when q +- 1 cannot be factored.
std::uint64_t psl2_order(const Mat2<FFElement>& g, std::uint64_t factor_bound = default_factor_bound());

/// Multiplicative order of Y in F_q[Y]/(Y^2 - s*Y + 1), i.e. of an eigenvalue
/// of companion(s). Requires s != +-2.
std::uint64_t eigenvalue_order(const FFElement& s, std::uint64_t factor_bound = default_factor_bound());

/// Least k with g^k = +-I by repeated multiplication; throws InvalidArgument
/// when no such k <= limit exists. Intended for small fields.
std::uint64_t psl2_order_by_powering(const Mat2<FFElement>& g, std::uint64_t limit);

/// True iff [g] has order exactly m, checked by powering: g^m = +-I while
/// g^(m/r) != +-I for every prime r dividing m.
bool has_psl2_order(const Mat2<FFElement>& g, std::uint64_t m);

/// For alpha of multiplicative order 2m (m > 1), returns m, the PSL2 order of
/// any g in SL2(k) with trace sign*(alpha + 1/alpha). The answer is
/// cross-checked against psl2_order of the companion matrix.
/// Throws OddOrder when the order of alpha is odd, InvalidArgument when it is 2.
std::uint64_t psl2_order_from_trace(const FiniteField& field, const FFElement& alpha, int sign);

}  // namespace finq
