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
#include <utility>
#include <vector>

#include "finq/number_field.hpp"
#include "finq/psl2.hpp"
#include "finq/witness.hpp"

namespace finq {

/// Places of a field above every prime up to a bound, computed once.
class PlaceTable {
 public:
  PlaceTable(NumberField field, std::uint64_t prime_bound);

  const NumberField& field() const { return field_; }
  std::uint64_t prime_bound() const { return bound_; }
  const std::vector<std::pair<std::uint64_t, std::vector<Place>>>& entries() const { return entries_; }

 private:
  NumberField field_;
  std::uint64_t bound_;
  std::vector<std::pair<std::uint64_t, std::vector<Place>>> entries_;
};

struct ScanHit {
  std::uint64_t p = 0;
  IntPolynomial factor;
  unsigned residue_degree = 0;
  bool ramified = false;
  std::uint64_t order = 0;
};

struct ScanOptions {
  bool stop_at_first = false;
  const PlaceTable* places = nullptr;  // reused when it covers the bound
};

/// Every place above a prime <= prime_bound where g reduces and [g] has PSL2
/// order exactly m, ramified places included. m = 1 and m = 2 are allowed.
std::vector<ScanHit> empirical_witness_scan(const Mat2<NFElement>& g, std::uint64_t m, std::uint64_t prime_bound,
                                            const ScanOptions& options = {});

struct ProfileRow {
  std::uint64_t m = 0;
  std::optional<std::uint64_t> first_prime;
};

/// For each m in [m_lo, m_hi], the smallest prime carrying a place where [g]
/// has order m.
std::vector<ProfileRow> finitistic_profile(const Mat2<NFElement>& g, std::uint64_t m_lo, std::uint64_t m_hi,
                                           std::uint64_t prime_bound);

struct TraceScanRow {
  Integer trace;
  std::uint64_t m = 0;
  std::optional<std::uint64_t> witness_prime;
  std::optional<CertificateLevel> level;
  std::optional<std::uint64_t> verified_order;  // set when the certificate re-verifies
  bool exceptional = false;                     // no certificate found
  std::string failure;                          // failure reason when exceptional
};

/// Runs certify_order_witness on the companion matrix of every integer trace
/// in [lo, hi] over Q. Rows are returned in increasing trace order whatever
/// the thread count.
std::vector<TraceScanRow> scan_traces(const Integer& lo, const Integer& hi, std::uint64_t m,
                                      std::uint64_t prime_bound, const std::vector<std::uint64_t>& s = {},
                                      unsigned threads = 0);

/// Tab-separated rendering with a header line.
std::string to_tsv(const std::vector<TraceScanRow>& rows);

}  // namespace finq
