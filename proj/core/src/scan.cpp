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

#include "finq/scan.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "finq/error.hpp"

namespace finq {

PlaceTable::PlaceTable(NumberField field, std::uint64_t prime_bound)
    : field_(std::move(field)), bound_(prime_bound) {
  for (std::uint64_t p : primes_up_to(prime_bound)) entries_.emplace_back(p, nf_places_above(field_, p));
}

namespace {

bool reduces(const Mat2<NFElement>& g, std::uint64_t p) {
  return reduces_at(g.a, p) && reduces_at(g.b, p) && reduces_at(g.c, p) && reduces_at(g.d, p);
}

// Visits (p, place, reduced matrix) for all places where g reduces; the
// visitor returns false to stop.
template <class Visit>
void for_each_reduction(const Mat2<NFElement>& g, std::uint64_t prime_bound, const PlaceTable* table, Visit&& visit) {
  std::optional<PlaceTable> own;
  if (table == nullptr || table->prime_bound() < prime_bound || !(table->field() == g.a.field())) {
    own.emplace(g.a.field(), prime_bound);
    table = &*own;
  }
  for (const auto& [p, places] : table->entries()) {
    if (p > prime_bound) break;
    if (!reduces(g, p)) continue;
    for (const Place& place : places) {
      if (!visit(p, place, mat_reduce(g, place))) return;
    }
  }
}

}  // namespace

std::vector<ScanHit> empirical_witness_scan(const Mat2<NFElement>& g, std::uint64_t m, std::uint64_t prime_bound,
                                            const ScanOptions& options) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "order m must be positive");
  std::vector<ScanHit> hits;
  for_each_reduction(g, prime_bound, options.places,
                     [&](std::uint64_t p, const Place& place, const Mat2<FFElement>& reduced) {
                       if (has_psl2_order(reduced, m)) {
                         hits.push_back({p, place.factor, place.residue_degree, place.ramified, m});
                         if (options.stop_at_first) return false;
                       }
                       return true;
                     });
  return hits;
}

std::vector<ProfileRow> finitistic_profile(const Mat2<NFElement>& g, std::uint64_t m_lo, std::uint64_t m_hi,
                                           std::uint64_t prime_bound) {
  if (m_lo == 0 || m_lo > m_hi) fail(ErrorKind::InvalidArgument, "need 1 <= m_lo <= m_hi");
  std::map<std::uint64_t, std::uint64_t> first;
  for_each_reduction(g, prime_bound, nullptr, [&](std::uint64_t p, const Place&, const Mat2<FFElement>& reduced) {
    const std::uint64_t order = psl2_order(reduced);
    if (order >= m_lo && order <= m_hi) first.emplace(order, p);
    return true;
  });
  std::vector<ProfileRow> rows;
  for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
    auto it = first.find(m);
    rows.push_back({m, it == first.end() ? std::nullopt : std::optional(it->second)});
  }
  return rows;
}

std::vector<TraceScanRow> scan_traces(const Integer& lo, const Integer& hi, std::uint64_t m,
                                      std::uint64_t prime_bound, const std::vector<std::uint64_t>& s,
                                      unsigned threads) {
  if (lo > hi) fail(ErrorKind::InvalidArgument, "empty trace range");
  const Integer span = hi - lo + 1;
  if (!fits_u64(span) || span > 100000000) fail(ErrorKind::InvalidArgument, "trace range too large");
  const std::size_t count = to_u64(span);
  std::vector<TraceScanRow> rows(count);
  const NumberField q = NumberField::rationals();
  CertifyOptions options;
  options.prime_cap = prime_bound;

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      TraceScanRow& row = rows[i];
      row.trace = lo + Integer(static_cast<unsigned long>(i));
      row.m = m;
      const WitnessResult result =
          certify_order_witness(WitnessElement::from_trace(q.from_rational(Rational(row.trace))), m, s, options);
      if (const auto* cert = std::get_if<OrderCertificate>(&result)) {
        row.witness_prime = cert->p;
        row.level = cert->level;
        if (verify_certificate(*cert)) row.verified_order = cert->claimed_order;
      } else {
        row.exceptional = true;
        row.failure = to_string(std::get<WitnessFailure>(result).reason);
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  return rows;
}

std::string to_tsv(const std::vector<TraceScanRow>& rows) {
  std::ostringstream out;
  out << "trace\tm\twitness_prime\tlevel\tverified_order\texceptional_flag\n";
  for (const auto& row : rows) {
    out << to_string(row.trace) << '\t' << row.m << '\t';
    out << (row.witness_prime ? std::to_string(*row.witness_prime) : "-") << '\t';
    out << (row.level ? std::string(to_string(*row.level)) : "-") << '\t';
    out << (row.verified_order ? std::to_string(*row.verified_order) : "-") << '\t';
    out << (row.exceptional ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace finq
