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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "finq/integer.hpp"
#include "finq/number_field.hpp"
#include "finq/polynomial.hpp"
#include "finq/psl2.hpp"

namespace finq {

struct CandidatePrime {
  Integer p;
  bool plus = false;   // divides Res(chi_t, psi)
  bool minus = false;  // divides Res(chi_-t, psi)
};

/// Primes at which t can reduce to +-tau, tau = 2cos(pi/m).
struct CandidateSet {
  bool all_primes = false;  // a resultant vanishes: t is conjugate to +-tau
  Integer plus_resultant;
  Integer minus_resultant;
  std::vector<CandidatePrime> primes;  // increasing, primes of S removed
};

/// Prime divisors of Res(chi_t, psi_2m) * Res(chi_-t, psi_2m), where chi is
/// the characteristic polynomial with denominators cleared. At most `limit`
/// primes are returned when a limit is given. Throws InvalidArgument for
/// m <= 2 and FactorBoundExceeded when the resultants cannot be factored.
CandidateSet candidate_primes(const NFElement& t, std::uint64_t m, const std::vector<std::uint64_t>& s,
                              std::optional<std::size_t> limit = std::nullopt,
                              std::uint64_t factor_bound = default_factor_bound());

enum class ElementKind { Matrix, Word, Trace };

/// The element a witness is sought for. `matrix` is always the element
/// itself; for a bare trace it is the companion matrix.
struct WitnessElement {
  ElementKind kind = ElementKind::Matrix;
  Mat2<NFElement> matrix;
  std::optional<GroupPreset> preset;
  std::optional<Word> word;

  static WitnessElement from_matrix(Mat2<NFElement> matrix);
  static WitnessElement from_word(GroupPreset preset, Word word);
  static WitnessElement from_trace(const NFElement& trace);

  const NumberField& field() const { return matrix.a.field(); }
  NFElement trace() const { return matrix.trace(); }
};

using RationalVector = std::vector<Rational>;
using ResidueVector = std::vector<std::uint64_t>;
using RationalMatrix = std::array<RationalVector, 4>;

struct PresetRecord {
  std::string label;
  std::vector<std::uint64_t> s;
  std::vector<std::pair<std::string, RationalMatrix>> generators;

  friend bool operator==(const PresetRecord&, const PresetRecord&) = default;
};

/// Plain-data description of the certified element.
struct ElementRecord {
  ElementKind kind = ElementKind::Matrix;
  RationalMatrix matrix;  // Matrix and Word kinds
  RationalVector trace;   // Trace kind
  std::string word;       // Word kind
  std::optional<PresetRecord> preset;

  friend bool operator==(const ElementRecord&, const ElementRecord&) = default;
};

/// An element of order 2m in k_p (one coefficient vector), or the class of Y
/// in the quadratic extension k_p[Y]/(Y^2 - eps*t*Y + 1) (two vectors c0, c1
/// standing for c0 + c1*Y).
struct AlphaRecord {
  bool in_extension = false;
  std::vector<ResidueVector> coeffs;

  friend bool operator==(const AlphaRecord&, const AlphaRecord&) = default;
};

enum class CertificateLevel { PaperCertified, Verified };

std::string_view to_string(CertificateLevel level);
std::string_view to_string(ElementKind kind);

/// Self-contained witness that [gamma] has order m in PSL2(k_p). Everything
/// in it can be recomputed from the field, the element, m and (p, factor).
struct OrderCertificate {
  IntPolynomial field_poly;
  bool assumed_irreducible = false;
  std::vector<std::uint64_t> s;
  ElementRecord element;
  std::uint64_t m = 0;
  std::uint64_t n = 0;  // 2m
  Integer modulus;      // N(2m)
  std::uint64_t p = 0;
  IntPolynomial place_factor;
  unsigned residue_degree = 0;
  bool ramified = false;
  std::optional<int> epsilon;  // +1 preferred; absent when neither +-t is a root of psi_2m at p
  std::optional<AlphaRecord> alpha;
  std::array<ResidueVector, 4> reduced;
  std::uint64_t claimed_order = 0;
  CertificateLevel level = CertificateLevel::Verified;
  std::vector<Integer> excluded_primes;  // primes of 2N together with S, increasing

  friend bool operator==(const OrderCertificate&, const OrderCertificate&) = default;
};

enum class FailureReason { Exceptional, AllCandidatesRejected, DegenerateElement, FactorBoundExceeded };

std::string_view to_string(FailureReason reason);

struct WitnessFailure {
  FailureReason reason = FailureReason::Exceptional;
  std::vector<std::string> diagnostics;  // per-prime rejection log
};

using WitnessResult = std::variant<OrderCertificate, WitnessFailure>;

struct CertifyOptions {
  std::uint64_t prime_cap = 100000;
  bool allow_ramified = false;
  std::uint64_t factor_bound = default_factor_bound();
};

/// Searches candidate primes in increasing order (every prime up to the cap
/// when the candidate set is AllPrimes) for a place outside S where [gamma]
/// has PSL2 order exactly m. A paper-certified witness (p not dividing 2N,
/// unramified, eigenvalue of order 2m) is preferred; otherwise the first
/// verified one is returned. Throws InvalidArgument for m <= 2 or an element
/// that is not S-integral, NotUnimodular for det != 1.
WitnessResult certify_order_witness(const WitnessElement& element, std::uint64_t m,
                                    const std::vector<std::uint64_t>& s, const CertifyOptions& options = {});

struct VerifyResult {
  bool accepted = false;
  std::string reason;  // first failing check; empty on acceptance

  explicit operator bool() const { return accepted; }
};

/// Known presets by label, for binding the label of a word certificate.
using PresetResolver = std::function<std::optional<GroupPreset>(std::string_view label)>;

/// Rebuilds the field, element and place from the certificate and recomputes
/// every derived field. The order is re-checked by powering, independently of
/// the eigenvalue path used during the search. With a resolver, the preset
/// label of a word certificate must name a preset equal to the embedded one.
VerifyResult verify_certificate(const OrderCertificate& certificate, const PresetResolver& resolve = {});

/// Record <-> object conversions shared by certificates and preset files.
RationalVector to_record(const NFElement& x);
RationalMatrix to_record(const Mat2<NFElement>& g);
PresetRecord to_record(const GroupPreset& preset);
ResidueVector to_record(const FFElement& x);
NFElement from_record(const NumberField& field, const RationalVector& coeffs);
Mat2<NFElement> from_record(const NumberField& field, const RationalMatrix& entries);
GroupPreset from_record(const NumberField& field, const PresetRecord& record);

}  // namespace finq
