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

#include "finq/witness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "finq/cyclotomic.hpp"
#include "finq/error.hpp"

namespace finq {

std::string_view to_string(CertificateLevel level) {
  return level == CertificateLevel::PaperCertified ? "paper-certified" : "verified";
}

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::Matrix: return "matrix";
    case ElementKind::Word: return "word";
    case ElementKind::Trace: return "trace";
  }
  return "matrix";
}

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::Exceptional: return "Exceptional";
    case FailureReason::AllCandidatesRejected: return "AllCandidatesRejected";
    case FailureReason::DegenerateElement: return "DegenerateElement";
    case FailureReason::FactorBoundExceeded: return "FactorBoundExceeded";
  }
  return "Exceptional";
}

// ---------------------------------------------------------------------------
// Records

RationalVector to_record(const NFElement& x) { return x.coeffs(); }

RationalMatrix to_record(const Mat2<NFElement>& g) {
  return {to_record(g.a), to_record(g.b), to_record(g.c), to_record(g.d)};
}

PresetRecord to_record(const GroupPreset& preset) {
  PresetRecord out{preset.label, preset.s, {}};
  for (const auto& [name, g] : preset.generators) out.generators.emplace_back(name, to_record(g));
  std::sort(out.generators.begin(), out.generators.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

ResidueVector to_record(const FFElement& x) { return x.coeffs(); }

NFElement from_record(const NumberField& field, const RationalVector& coeffs) {
  if (coeffs.size() != field.degree())
    fail(ErrorKind::InvalidArgument, "field element needs exactly " + std::to_string(field.degree()) + " coefficients");
  return field.element(coeffs);
}

Mat2<NFElement> from_record(const NumberField& field, const RationalMatrix& entries) {
  return {from_record(field, entries[0]), from_record(field, entries[1]), from_record(field, entries[2]),
          from_record(field, entries[3])};
}

GroupPreset from_record(const NumberField& field, const PresetRecord& record) {
  std::vector<std::pair<std::string, Mat2<NFElement>>> gens;
  for (const auto& [name, entries] : record.generators) gens.emplace_back(name, from_record(field, entries));
  return GroupPreset::make(record.label, field, record.s, std::move(gens));
}

WitnessElement WitnessElement::from_matrix(Mat2<NFElement> matrix) {
  return WitnessElement{ElementKind::Matrix, std::move(matrix), std::nullopt, std::nullopt};
}

WitnessElement WitnessElement::from_word(GroupPreset preset, Word word) {
  Mat2<NFElement> value = word_eval(preset, word);
  return WitnessElement{ElementKind::Word, std::move(value), std::move(preset), std::move(word)};
}

WitnessElement WitnessElement::from_trace(const NFElement& trace) {
  return WitnessElement{ElementKind::Trace, companion(trace), std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------------------
// Candidates

namespace {

IntPolynomial integral_charpoly(const NFElement& t) { return clear_denominators(nf_charpoly(t)); }

struct RawCandidates {
  CandidateSet set;
  bool complete = true;
};

RawCandidates compute_candidates(const NFElement& t, std::uint64_t m, const std::vector<std::uint64_t>& s,
                                 std::uint64_t factor_bound) {
  if (m <= 2) fail(ErrorKind::InvalidArgument, "witness order m must exceed 2");
  const IntPolynomial psi = real_cyclotomic(m);
  RawCandidates out;
  out.set.plus_resultant = resultant(integral_charpoly(t), psi);
  out.set.minus_resultant = resultant(integral_charpoly(-t), psi);
  if (out.set.plus_resultant == 0 || out.set.minus_resultant == 0) {
    out.set.all_primes = true;
    return out;
  }
  std::map<Integer, CandidatePrime> found;
  for (int sign : {1, -1}) {
    const Integer& r = sign > 0 ? out.set.plus_resultant : out.set.minus_resultant;
    const IntegerFactorization fac = factor_integer(r, factor_bound);
    out.complete = out.complete && fac.complete;
    for (const auto& [prime, e] : fac.factors) {
      (void)e;
      CandidatePrime& c = found[prime];
      c.p = prime;
      (sign > 0 ? c.plus : c.minus) = true;
    }
  }
  for (auto& [prime, c] : found) {
    if (fits_u64(prime) && std::binary_search(s.begin(), s.end(), to_u64(prime))) continue;
    out.set.primes.push_back(std::move(c));
  }
  return out;
}

std::vector<std::uint64_t> sorted_primes(std::vector<std::uint64_t> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

CandidateSet candidate_primes(const NFElement& t, std::uint64_t m, const std::vector<std::uint64_t>& s,
                              std::optional<std::size_t> limit, std::uint64_t factor_bound) {
  RawCandidates raw = compute_candidates(t, m, sorted_primes(s), factor_bound);
  if (!raw.complete) fail(ErrorKind::FactorBoundExceeded, "candidate resultants could not be factored completely");
  if (limit && raw.set.primes.size() > *limit) raw.set.primes.resize(*limit);
  return raw.set;
}

// ---------------------------------------------------------------------------
// Certificate construction

namespace {

std::vector<Integer> excluded_prime_set(const Integer& modulus, const std::vector<std::uint64_t>& s,
                                        std::uint64_t factor_bound) {
  const IntegerFactorization fac = factor_integer(2 * modulus, factor_bound);
  if (!fac.complete) fail(ErrorKind::FactorBoundExceeded, "2N could not be factored");
  std::vector<Integer> out;
  for (const auto& [prime, e] : fac.factors) {
    (void)e;
    out.push_back(prime);
  }
  for (std::uint64_t p : s) out.push_back(from_u64(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(const std::vector<Integer>& primes, std::uint64_t p) {
  return std::binary_search(primes.begin(), primes.end(), from_u64(p));
}

// Everything about a certificate that is determined by (element, m, place).
struct PlaceData {
  std::optional<int> epsilon;
  std::optional<AlphaRecord> alpha;
  CertificateLevel level = CertificateLevel::Verified;
};

PlaceData derive_place_data(const NFElement& t, std::uint64_t m, const Place& place,
                            const std::vector<Integer>& excluded, std::uint64_t factor_bound) {
  PlaceData out;
  const FiniteField& k = place.residue_field;
  const FFElement tbar = nf_reduce(t, place);
  const IntPolynomial psi = real_cyclotomic(m);
  if (evaluate(psi, tbar).is_zero()) {
    out.epsilon = 1;
  } else if (evaluate(psi, -tbar).is_zero()) {
    out.epsilon = -1;
  }
  if (out.epsilon && place.p != 2) {
    const FFElement s = *out.epsilon > 0 ? tbar : -tbar;
    const FFElement two = k.from_u64(2);
    if (!(s == two) && !(s == -two)) {
      if (auto root = ff_sqrt(s * s - k.from_u64(4))) {
        const FFElement half = two.inverse();
        FFElement r1 = (s + *root) * half;
        FFElement r2 = (s - *root) * half;
        const FFElement& alpha = k.index_of(r1) <= k.index_of(r2) ? r1 : r2;
        if (ff_mult_order(alpha, factor_bound) == 2 * m) out.alpha = AlphaRecord{false, {to_record(alpha)}};
      } else if (eigenvalue_order(s, factor_bound) == 2 * m) {
        out.alpha = AlphaRecord{true, {to_record(k.zero()), to_record(k.one())}};
      }
    }
  }
  const bool paper = !contains(excluded, place.p) && !place.ramified && out.epsilon && out.alpha;
  out.level = paper ? CertificateLevel::PaperCertified : CertificateLevel::Verified;
  return out;
}

ElementRecord element_record(const WitnessElement& element) {
  ElementRecord out;
  out.kind = element.kind;
  switch (element.kind) {
    case ElementKind::Trace:
      out.trace = to_record(element.trace());
      break;
    case ElementKind::Word:
      out.matrix = to_record(element.matrix);
      out.word = to_string(*element.word);
      out.preset = to_record(*element.preset);
      break;
    case ElementKind::Matrix:
      out.matrix = to_record(element.matrix);
      break;
  }
  return out;
}

void check_s_integral(const Mat2<NFElement>& g, const std::vector<std::uint64_t>& s) {
  for (const NFElement* e : {&g.a, &g.b, &g.c, &g.d}) {
    if (!is_s_integral(*e, s)) fail(ErrorKind::InvalidArgument, "element is not S-integral: entry " + to_string(*e));
  }
}

constexpr std::size_t kMaxDiagnostics = 2000;

}  // namespace

WitnessResult certify_order_witness(const WitnessElement& element, std::uint64_t m,
                                    const std::vector<std::uint64_t>& s_in, const CertifyOptions& options) {
  if (m <= 2) fail(ErrorKind::InvalidArgument, "witness order m must exceed 2");
  const std::vector<std::uint64_t> s = sorted_primes(s_in);
  for (std::uint64_t p : s) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "S contains the non-prime " + std::to_string(p));
  }
  const Mat2<NFElement>& gamma = element.matrix;
  if (!is_unimodular(gamma)) fail(ErrorKind::NotUnimodular, "element does not have determinant 1");
  check_s_integral(gamma, s);
  if (is_plus_minus_identity(gamma)) {
    return WitnessFailure{FailureReason::DegenerateElement, {"element is +-I; its only finitistic order is 1"}};
  }

  const NFElement t = gamma.trace();
  const Integer modulus = modulus_bound_value(2 * m);
  std::vector<Integer> excluded;
  RawCandidates raw;
  try {
    excluded = excluded_prime_set(modulus, s, options.factor_bound);
    raw = compute_candidates(t, m, s, options.factor_bound);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::FactorBoundExceeded) throw;
    return WitnessFailure{FailureReason::FactorBoundExceeded, {e.what()}};
  }
  // Partial factorizations still list every prime below the trial bound.
  if (!raw.complete && options.prime_cap > options.factor_bound) {
    return WitnessFailure{FailureReason::FactorBoundExceeded,
                          {"resultant cofactor " + to_string(Integer(raw.set.plus_resultant * raw.set.minus_resultant)) +
                           " not factored and prime cap exceeds the factor bound"}};
  }

  std::vector<std::uint64_t> primes;
  if (raw.set.all_primes) {
    primes = primes_up_to(options.prime_cap);
  } else {
    for (const auto& c : raw.set.primes) {
      if (c.p <= options.prime_cap) primes.push_back(to_u64(c.p));
    }
  }

  std::vector<std::string> log;
  auto note = [&log](std::string line) {
    if (log.size() < kMaxDiagnostics) log.push_back(std::move(line));
  };
  if (!raw.set.all_primes) {
    for (const auto& c : raw.set.primes) {
      if (c.p > options.prime_cap) note("p=" + to_string(c.p) + ": above prime cap");
    }
  }

  std::optional<OrderCertificate> fallback;
  for (std::uint64_t p : primes) {
    if (std::binary_search(s.begin(), s.end(), p)) {
      note("p=" + std::to_string(p) + ": in S");
      continue;
    }
    bool reduces = true;
    for (const NFElement* e : {&gamma.a, &gamma.b, &gamma.c, &gamma.d}) reduces = reduces && reduces_at(*e, p);
    if (!reduces) {
      note("p=" + std::to_string(p) + ": element does not reduce");
      continue;
    }
    for (const Place& place : nf_places_above(element.field(), p)) {
      const std::string where = "p=" + std::to_string(p) + " factor " + to_string(place.factor, 'x');
      if (place.ramified && !options.allow_ramified) {
        note(where + ": ramified");
        continue;
      }
      const Mat2<FFElement> reduced = mat_reduce(gamma, place);
      std::uint64_t order = 0;
      try {
        order = psl2_order(reduced, options.factor_bound);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::FactorBoundExceeded) throw;
        note(where + ": " + e.what());
        continue;
      }
      if (order != m) {
        note(where + ": PSL2 order " + std::to_string(order));
        continue;
      }
      const PlaceData data = derive_place_data(t, m, place, excluded, options.factor_bound);
      OrderCertificate cert;
      cert.field_poly = element.field().defining_polynomial();
      cert.assumed_irreducible = element.field().assumed_irreducible();
      cert.s = s;
      cert.element = element_record(element);
      cert.m = m;
      cert.n = 2 * m;
      cert.modulus = modulus;
      cert.p = p;
      cert.place_factor = place.factor;
      cert.residue_degree = place.residue_degree;
      cert.ramified = place.ramified;
      cert.epsilon = data.epsilon;
      cert.alpha = data.alpha;
      cert.reduced = {to_record(reduced.a), to_record(reduced.b), to_record(reduced.c), to_record(reduced.d)};
      cert.claimed_order = order;
      cert.level = data.level;
      cert.excluded_primes = excluded;
      if (cert.level == CertificateLevel::PaperCertified) return cert;
      note(where + ": order " + std::to_string(m) + " at an excluded prime (verified level)");
      if (!fallback) fallback = std::move(cert);
    }
  }
  if (fallback) return *std::move(fallback);
  if (!raw.set.all_primes && raw.set.primes.empty()) {
    return WitnessFailure{FailureReason::Exceptional,
                          {"no prime divides Res(chi_t, psi) * Res(chi_-t, psi) = " +
                           to_string(Integer(raw.set.plus_resultant * raw.set.minus_resultant))}};
  }
  if (log.empty()) log.push_back("no candidate prime below the prime cap " + std::to_string(options.prime_cap));
  return WitnessFailure{FailureReason::AllCandidatesRejected, std::move(log)};
}

// ---------------------------------------------------------------------------
// Verification

namespace {

VerifyResult reject(std::string reason) { return VerifyResult{false, std::move(reason)}; }

}  // namespace

VerifyResult verify_certificate(const OrderCertificate& c, const PresetResolver& resolve) {
  std::optional<NumberField> field;
  try {
    field = NumberField::make(c.field_poly);
  } catch (const Error& e) {
    return reject(std::string("field: ") + e.what());
  }
  if (field->assumed_irreducible() != c.assumed_irreducible) return reject("field: irreducibility marker mismatch");

  if (!std::is_sorted(c.s.begin(), c.s.end()) || std::adjacent_find(c.s.begin(), c.s.end()) != c.s.end())
    return reject("S: primes must be increasing and distinct");
  for (std::uint64_t p : c.s) {
    if (!is_prime(p)) return reject("S: " + std::to_string(p) + " is not prime");
  }

  if (c.m <= 2) return reject("m: must exceed 2");
  if (c.n != 2 * c.m) return reject("n: must equal 2m");
  const Integer modulus = modulus_bound_value(c.n);
  if (c.modulus != modulus) return reject("N: expected " + to_string(modulus));
  std::vector<Integer> excluded;
  try {
    excluded = excluded_prime_set(modulus, c.s, default_factor_bound());
  } catch (const Error& e) {
    return reject(std::string("excluded primes: ") + e.what());
  }
  if (c.excluded_primes != excluded) return reject("excluded primes: mismatch with primes of 2N and S");

  // Element.
  std::optional<Mat2<NFElement>> gamma;
  try {
    switch (c.element.kind) {
      case ElementKind::Trace:
        if (!c.element.word.empty() || c.element.preset) return reject("element: stray word data on a trace");
        gamma = companion(from_record(*field, c.element.trace));
        break;
      case ElementKind::Matrix:
        if (!c.element.word.empty() || c.element.preset) return reject("element: stray word data on a matrix");
        gamma = from_record(*field, c.element.matrix);
        break;
      case ElementKind::Word: {
        if (!c.element.preset) return reject("element: word without preset");
        const GroupPreset preset = from_record(*field, *c.element.preset);
        const Word word = Word::parse(c.element.word);
        if (to_string(word) != c.element.word) return reject("element: word is not in canonical form");
        gamma = from_record(*field, c.element.matrix);
        if (!(word_eval(preset, word) == *gamma)) return reject("element: word value does not match the matrix");
        if (!std::includes(c.s.begin(), c.s.end(), preset.s.begin(), preset.s.end()))
          return reject("element: preset S is not contained in S");
        if (resolve) {
          const std::optional<GroupPreset> known = resolve(preset.label);
          if (!known) return reject("element: unknown preset label '" + preset.label + "'");
          if (!(known->field == *field) || to_record(*known) != *c.element.preset)
            return reject("element: preset does not match the preset labelled '" + preset.label + "'");
        }
        break;
      }
    }
  } catch (const Error& e) {
    return reject(std::string("element: ") + e.what());
  }
  if (c.element.kind != ElementKind::Trace && !c.element.trace.empty())
    return reject("element: stray trace data");
  if (!is_unimodular(*gamma)) return reject("element: determinant is not 1");
  for (const NFElement* e : {&gamma->a, &gamma->b, &gamma->c, &gamma->d}) {
    if (!is_s_integral(*e, c.s)) return reject("element: not S-integral");
  }
  if (is_plus_minus_identity(*gamma)) return reject("element: +-I has no witness of order m > 2");

  // Place.
  if (!is_prime(c.p)) return reject("place: p is not prime");
  if (std::binary_search(c.s.begin(), c.s.end(), c.p)) return reject("place: p lies in S");
  std::optional<Place> place;
  try {
    place = nf_place(*field, c.p, c.place_factor);
  } catch (const Error& e) {
    return reject(std::string("place: ") + e.what());
  }
  if (place->residue_degree != c.residue_degree) return reject("place: residue degree mismatch");
  if (place->ramified != c.ramified) return reject("place: ramification flag mismatch");

  std::optional<Mat2<FFElement>> reduced;
  try {
    reduced = mat_reduce(*gamma, *place);
  } catch (const Error& e) {
    return reject(std::string("candidate/reduction mismatch: ") + e.what());
  }
  const std::array<ResidueVector, 4> expected = {to_record(reduced->a), to_record(reduced->b), to_record(reduced->c),
                                                 to_record(reduced->d)};
  if (expected != c.reduced) return reject("candidate/reduction mismatch: reduced matrix differs");

  if (c.claimed_order != c.m) return reject("order mismatch: claimed order differs from m");
  if (!has_psl2_order(*reduced, c.m)) return reject("order mismatch: powering does not give order m");

  PlaceData data;
  try {
    data = derive_place_data(gamma->trace(), c.m, *place, excluded, default_factor_bound());
  } catch (const Error& e) {
    return reject(std::string("epsilon/alpha: ") + e.what());
  }
  if (c.epsilon != data.epsilon) return reject("epsilon: mismatch with the reduced trace");
  if (c.alpha != data.alpha) return reject("alpha: mismatch with the canonical eigenvalue");
  if (c.alpha) {
    // Independent restatement of the eigenvalue claim.
    const FiniteField& k = place->residue_field;
    const FFElement s = *c.epsilon > 0 ? reduced->trace() : -reduced->trace();
    if (!c.alpha->in_extension) {
      const FFElement a = k.element(c.alpha->coeffs.at(0));
      if (!(a + a.inverse() == s)) return reject("alpha: alpha + 1/alpha is not eps * trace");
      if (ff_mult_order(a) != c.n) return reject("alpha: order is not 2m");
    } else if (eigenvalue_order(s) != c.n) {
      return reject("alpha: order is not 2m");
    }
  }
  if (c.level != data.level) return reject("level: claimed level is not justified");
  return VerifyResult{true, {}};
}

}  // namespace finq
