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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finq/number_field.hpp"
#include "finq/witness.hpp"

namespace finq {

/// u with u and 1 - u both S-units, written as sign * prod basis_i^e_i.
struct SUnitSolution {
  NFElement u;
  int sign = 1;
  std::vector<std::int64_t> exponents;  // over SUnitSet::basis
};

struct SUnitSet {
  std::vector<std::uint64_t> primes;
  std::vector<std::string> basis;  // the fundamental unit (quadratic case) then the S-prime generators
  std::vector<SUnitSolution> solutions;
  bool complete = false;
};

/// x is a unit of O_{K,S}: x and 1/x both have S-integral coordinates.
/// Meaningful for fields whose ring of integers is Z[x].
bool is_s_unit(const NFElement& x, const std::vector<std::uint64_t>& s);

/// All rational u = +-prod p^e (|e| <= exponent_bound) with 1 - u an S-unit,
/// closed under u -> 1 - u and u -> 1/u. `complete` is set only when S is a
/// subset of {2, 3} and the result matches the known solution set.
SUnitSet sunit_solutions_rational(const std::vector<std::uint64_t>& s, std::uint64_t exponent_bound);

/// A real quadratic field Q[x]/(poly) with Z[x] its ring of integers and
/// class number one, optionally with a fundamental unit.
struct QuadraticFieldData {
  std::string label;
  IntPolynomial poly;
  std::optional<std::vector<Rational>> fundamental_unit;
};

/// "sqrt2" (x^2 - 2, 1 + x), "sqrt3" (x^2 - 3, 2 + x) and "sqrt5"
/// (x^2 - x - 1, x). Throws InvalidArgument for other labels.
QuadraticFieldData quadratic_preset(std::string_view label);
std::vector<std::string> quadratic_preset_labels();

/// Bounded search over +-eps^a * prod pi_i^e_i, pi_i generators of the primes
/// above S, followed by anharmonic closure. Never complete. Throws
/// MissingFundamentalUnit, InvalidArgument for a bad field description.
SUnitSet sunit_solutions_quadratic(const QuadraticFieldData& data, const std::vector<std::uint64_t>& s,
                                   std::uint64_t exponent_bound);

struct ExceptionalCandidate {
  NFElement value;  // (2u - 1) tau, as an element of K
  NFElement u;      // in Q(tau)
  bool conjugate_embedding = false;  // tau-field mapped into K through the other root
  bool s_integral = false;
  std::string status;
  std::optional<std::uint64_t> witness_prime;
  std::optional<CertificateLevel> level;
};

struct ExceptionalReport {
  std::uint64_t m = 0;
  NumberField field;
  std::vector<std::uint64_t> s;
  std::vector<std::uint64_t> s0;  // S with 2, N(2m) and tau made units
  NFElement tau;                   // in Q(tau)
  std::uint64_t exponent_bound = 0;
  std::uint64_t scan_bound = 0;
  bool units_complete = false;
  std::size_t unit_count = 0;
  std::vector<ExceptionalCandidate> candidates;  // increasing
  std::size_t dropped = 0;  // irrational candidates not placed in K (K not quadratic)
};

inline constexpr const char* kStatusNotSIntegral = "not S-integral";
inline constexpr const char* kStatusNoWitness = "no witness up to bound";
inline constexpr const char* kStatusExcludedWitness = "witness exists at excluded prime";
inline constexpr const char* kStatusPaperWitness = "paper-certified witness";
inline constexpr const char* kStatusScanWitness = "witness found by scan";

/// W = K intersected with {(2u - 1) tau : u in U}, U the S0-unit solutions in
/// Q(tau), each S-integral candidate annotated by a certified search and an
/// empirical scan up to scan_bound. Throws UnsupportedTauField unless
/// m is 3, 4, 5 or 6.
ExceptionalReport exceptional_trace_candidates(std::uint64_t m, const NumberField& field,
                                               const std::vector<std::uint64_t>& s, std::uint64_t exponent_bound,
                                               std::uint64_t scan_bound = 10000);

}  // namespace finq
