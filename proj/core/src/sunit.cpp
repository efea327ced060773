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

#include "finq/sunit.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "finq/cyclotomic.hpp"
#include "finq/error.hpp"
#include "finq/psl2.hpp"
#include "finq/scan.hpp"

namespace finq {

bool is_s_unit(const NFElement& x, const std::vector<std::uint64_t>& s) {
  if (x.is_zero()) return false;
  return is_s_integral(x, s) && is_s_integral(x.inverse(), s);
}

namespace {

std::vector<std::uint64_t> checked_primes(std::vector<std::uint64_t> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (std::uint64_t p : s) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  }
  return s;
}

bool rational_s_unit(const Rational& x, const std::vector<std::uint64_t>& s) {
  return x != 0 && is_supported_on(x.get_num(), s) && is_supported_on(x.get_den(), s);
}

std::int64_t valuation(Integer n, std::uint64_t p) {
  std::int64_t v = 0;
  n = abs(n);
  const Integer q = from_u64(p);
  while (n != 0 && n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

// Visits every vector in [-bound, bound]^k.
template <class Visit>
void for_each_exponent(std::size_t k, std::int64_t bound, Visit&& visit) {
  std::vector<std::int64_t> e(k, -bound);
  while (true) {
    visit(e);
    std::size_t i = 0;
    while (i < k && e[i] == bound) e[i++] = -bound;
    if (i == k) return;
    ++e[i];
  }
}

// Closure under u -> 1 - u and u -> 1/u; both preserve the solution property.
template <class T, class Less, class OneMinus, class Inverse>
std::vector<T> anharmonic_closure(std::vector<T> seeds, Less less, OneMinus one_minus, Inverse inverse) {
  std::vector<T> out;
  auto seen = [&](const T& x) {
    return std::any_of(out.begin(), out.end(), [&](const T& y) { return !less(x, y) && !less(y, x); });
  };
  std::deque<T> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    T x = queue.front();
    queue.pop_front();
    if (seen(x)) continue;
    queue.push_back(one_minus(x));
    queue.push_back(inverse(x));
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), less);
  return out;
}

std::set<Rational> known_rational_solutions(const std::vector<std::uint64_t>& s) {
  const std::vector<std::uint64_t> two{2}, two_three{2, 3};
  if (s == two) return {Rational(2), Rational(-1), Rational(1, 2)};
  if (s == two_three) {
    std::set<Rational> out;
    // Orbits of 1 + 1 = 2, 1 + 2 = 3, 1 + 3 = 4 and 1 + 8 = 9.
    for (const Rational& u : {Rational(2), Rational(3), Rational(4), Rational(9)}) {
      const Rational w = 1 - u;
      for (const Rational& v : std::vector<Rational>{u, w, 1 / u, 1 / w, -w / u, -u / w}) out.insert(v);
    }
    return out;
  }
  return {};
}

}  // namespace

SUnitSet sunit_solutions_rational(const std::vector<std::uint64_t>& s_in, std::uint64_t exponent_bound) {
  const std::vector<std::uint64_t> s = checked_primes(s_in);
  if (exponent_bound > 1000) fail(ErrorKind::InvalidArgument, "exponent bound too large");
  const auto bound = static_cast<std::int64_t>(exponent_bound);

  std::vector<std::vector<Rational>> powers;
  for (std::uint64_t p : s) {
    std::vector<Rational> row;
    for (std::int64_t e = -bound; e <= bound; ++e) {
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), from_u64(p).get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
      row.push_back(e < 0 ? Rational(Integer(1), pe) : Rational(pe));
    }
    powers.push_back(std::move(row));
  }

  std::vector<Rational> found;
  for_each_exponent(s.size(), bound, [&](const std::vector<std::int64_t>& e) {
    Rational x = 1;
    for (std::size_t i = 0; i < s.size(); ++i) x *= powers[i][static_cast<std::size_t>(e[i] + bound)];
    for (const Rational& u : std::vector<Rational>{x, -x}) {
      if (u != 1 && rational_s_unit(1 - u, s)) found.push_back(u);
    }
  });
  const std::vector<Rational> all = anharmonic_closure(
      std::move(found), std::less<Rational>(), [](const Rational& u) { return Rational(1 - u); },
      [](const Rational& u) { return Rational(1 / u); });

  SUnitSet out;
  out.primes = s;
  for (std::uint64_t p : s) out.basis.push_back(std::to_string(p));
  const NumberField q = NumberField::rationals();
  for (const Rational& u : all) {
    SUnitSolution sol{q.from_rational(u), sgn(u) < 0 ? -1 : 1, {}};
    for (std::uint64_t p : s) sol.exponents.push_back(valuation(u.get_num(), p) - valuation(u.get_den(), p));
    out.solutions.push_back(std::move(sol));
  }
  const bool tabulated = std::all_of(s.begin(), s.end(), [](std::uint64_t p) { return p == 2 || p == 3; });
  out.complete = tabulated && std::set<Rational>(all.begin(), all.end()) == known_rational_solutions(s);
  return out;
}

// ---------------------------------------------------------------------------
// Real quadratic fields

QuadraticFieldData quadratic_preset(std::string_view label) {
  if (label == "sqrt2") return {"sqrt2", IntPolynomial({-2, 0, 1}), std::vector<Rational>{1, 1}};
  if (label == "sqrt3") return {"sqrt3", IntPolynomial({-3, 0, 1}), std::vector<Rational>{2, 1}};
  if (label == "sqrt5") return {"sqrt5", IntPolynomial({-1, -1, 1}), std::vector<Rational>{0, 1}};
  fail(ErrorKind::InvalidArgument, "unknown quadratic field '" + std::string(label) + "'");
}

std::vector<std::string> quadratic_preset_labels() { return {"sqrt2", "sqrt3", "sqrt5"}; }

namespace {

struct Quadratic {
  NumberField field;
  Integer c0, c1;   // x^2 + c1 x + c0
  long double root;  // larger real root, the embedding used for ordering

  Rational norm(const NFElement& v) const {
    const Rational& a = v.coeffs()[0];
    const Rational& b = v.coeffs()[1];
    return a * a - a * b * Rational(c1) + b * b * Rational(c0);
  }

  NFElement conjugate(const NFElement& v) const {
    const Rational& a = v.coeffs()[0];
    const Rational& b = v.coeffs()[1];
    return field.element({a - b * Rational(c1), -b});
  }

  long double value(const NFElement& v) const {
    return static_cast<long double>(v.coeffs()[0].get_d()) + static_cast<long double>(v.coeffs()[1].get_d()) * root;
  }

  bool less(const NFElement& x, const NFElement& y) const {
    const long double a = value(x), b = value(y);
    if (a != b) return a < b;
    return x.coeffs() < y.coeffs();
  }
};

Quadratic make_quadratic(const IntPolynomial& poly) {
  if (poly.degree() != 2 || !poly.is_monic()) fail(ErrorKind::InvalidArgument, "expected a monic quadratic polynomial");
  Quadratic q{NumberField::make(poly), poly.coeff(0), poly.coeff(1), 0};
  const Integer disc = q.c1 * q.c1 - 4 * q.c0;
  if (disc <= 0) fail(ErrorKind::InvalidArgument, "field is not real quadratic");
  q.root = (-static_cast<long double>(q.c1.get_d()) + std::sqrt(static_cast<long double>(disc.get_d()))) / 2;
  return q;
}

bool integral(const NFElement& v) {
  return std::all_of(v.coeffs().begin(), v.coeffs().end(), [](const Rational& c) { return c.get_den() == 1; });
}

// Largest k with pi^k dividing the algebraic integer y in Z[x].
std::int64_t divisibility(NFElement y, const NFElement& pi) {
  const NFElement inv = pi.inverse();
  std::int64_t k = 0;
  while (true) {
    NFElement next = y * inv;
    if (!integral(next)) return k;
    y = std::move(next);
    ++k;
  }
}

std::int64_t pi_valuation(const NFElement& x, const NFElement& pi) {
  Integer den = 1;
  for (const Rational& c : x.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  const NFElement d = x.field().from_rational(Rational(den));
  return divisibility(x * d, pi) - divisibility(d, pi);
}

NFElement power(const NFElement& x, std::int64_t e) {
  const NFElement base = e < 0 ? x.inverse() : x;
  NFElement out = x.field().one();
  for (std::int64_t i = 0; i < std::abs(e); ++i) out *= base;
  return out;
}

// Generators of the primes above p: p itself when inert, one element of norm
// +-p when ramified, that element and its conjugate when split.
std::vector<NFElement> prime_generators(const Quadratic& q, std::uint64_t p) {
  const std::vector<Place> places = nf_places_above(q.field, p);
  if (places.size() == 1 && places[0].residue_degree == 2) return {q.field.from_rational(Rational(from_u64(p)))};
  constexpr long kBox = 200;
  const Rational target(from_u64(p));
  for (long r = 1; r <= kBox; ++r) {
    for (long a = -r; a <= r; ++a) {
      for (long b = -r; b <= r; ++b) {
        if (std::max(std::abs(a), std::abs(b)) != r) continue;
        const NFElement pi = q.field.element({Rational(a), Rational(b)});
        const Rational n = q.norm(pi);
        if (n != target && n != -target) continue;
        if (places.size() == 1) return {pi};
        return {pi, q.conjugate(pi)};
      }
    }
  }
  fail(ErrorKind::InvalidArgument, "no generator found for the primes above " + std::to_string(p));
}

}  // namespace

SUnitSet sunit_solutions_quadratic(const QuadraticFieldData& data, const std::vector<std::uint64_t>& s_in,
                                   std::uint64_t exponent_bound) {
  if (!data.fundamental_unit) fail(ErrorKind::MissingFundamentalUnit, "field '" + data.label + "' has no fundamental unit");
  const std::vector<std::uint64_t> s = checked_primes(s_in);
  if (exponent_bound > 200) fail(ErrorKind::InvalidArgument, "exponent bound too large");
  const auto bound = static_cast<std::int64_t>(exponent_bound);
  const Quadratic q = make_quadratic(data.poly);
  const NFElement eps = q.field.element(*data.fundamental_unit);
  const Rational eps_norm = q.norm(eps);
  if (!integral(eps) || (eps_norm != 1 && eps_norm != -1) || eps_norm == 0 || std::fabs(q.value(eps)) == 1.0L)
    fail(ErrorKind::InvalidArgument, "supplied fundamental unit is not a unit of infinite order");

  SUnitSet out;
  out.primes = s;
  std::vector<NFElement> basis{eps};
  out.basis.push_back(to_string(eps));
  for (std::uint64_t p : s) {
    for (NFElement& pi : prime_generators(q, p)) {
      out.basis.push_back(to_string(pi));
      basis.push_back(std::move(pi));
    }
  }

  std::vector<std::vector<NFElement>> powers;
  for (const NFElement& g : basis) {
    std::vector<NFElement> row;
    for (std::int64_t e = -bound; e <= bound; ++e) row.push_back(power(g, e));
    powers.push_back(std::move(row));
  }

  const NFElement one = q.field.one();
  std::vector<NFElement> found;
  for_each_exponent(basis.size(), bound, [&](const std::vector<std::int64_t>& e) {
    NFElement x = one;
    for (std::size_t i = 0; i < basis.size(); ++i) x *= powers[i][static_cast<std::size_t>(e[i] + bound)];
    for (const NFElement& u : {x, -x}) {
      if (u == one) continue;
      const NFElement v = one - u;
      if (is_s_integral(v, s) && rational_s_unit(q.norm(v), s)) found.push_back(u);
    }
  });
  const std::vector<NFElement> all = anharmonic_closure(
      std::move(found), [&q](const NFElement& x, const NFElement& y) { return q.less(x, y); },
      [&one](const NFElement& u) { return one - u; }, [](const NFElement& u) { return u.inverse(); });

  const long double log_eps = std::log(std::fabs(q.value(eps)));
  for (const NFElement& u : all) {
    SUnitSolution sol{u, 1, std::vector<std::int64_t>(basis.size(), 0)};
    NFElement rest = u;
    for (std::size_t i = 1; i < basis.size(); ++i) {
      sol.exponents[i] = pi_valuation(u, basis[i]);
      rest *= power(basis[i], -sol.exponents[i]);
    }
    const auto a = static_cast<std::int64_t>(std::llround(std::log(std::fabs(q.value(rest))) / log_eps));
    sol.exponents[0] = a;
    const NFElement unit_part = power(eps, a);
    if (rest == unit_part) {
      sol.sign = 1;
    } else if (rest == -unit_part) {
      sol.sign = -1;
    } else {
      throw std::logic_error("S-unit does not decompose over the generator basis: " + to_string(u));
    }
    out.solutions.push_back(std::move(sol));
  }
  out.complete = false;
  return out;
}

// ---------------------------------------------------------------------------
// Exceptional traces

namespace {

struct TauField {
  std::optional<QuadraticFieldData> quadratic;  // empty for Q
  NFElement tau;
};

TauField tau_field(std::uint64_t m) {
  const char* label = nullptr;
  switch (m) {
    case 3: return {std::nullopt, NumberField::rationals().one()};
    case 4: label = "sqrt2"; break;
    case 5: label = "sqrt5"; break;
    case 6: label = "sqrt3"; break;
    default:
      fail(ErrorKind::UnsupportedTauField,
           "2cos(pi/" + std::to_string(m) + ") does not generate Q or a supported quadratic field");
  }
  QuadraticFieldData data = quadratic_preset(label);
  const NumberField field = NumberField::make(data.poly);
  return {std::move(data), field.generator()};
}

// disc = d * s^2 with d squarefree.
std::pair<Integer, Integer> squarefree_split(const Integer& disc) {
  Integer d = 1, s = 1;
  const IntegerFactorization fac = factor_integer(disc, default_factor_bound());
  if (!fac.complete) fail(ErrorKind::FactorBoundExceeded, "discriminant could not be factored");
  for (const auto& [p, e] : fac.factors) {
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) d *= p;
  }
  return {d, s};
}

// sqrt(d) for the squarefree part d of the discriminant, as an element of the field.
std::pair<Integer, NFElement> sqrt_of_squarefree_disc(const NumberField& field) {
  const IntPolynomial& f = field.defining_polynomial();
  const Integer disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
  const auto [d, s] = squarefree_split(disc);
  const NFElement root = field.element({Rational(f.coeff(1), s), Rational(Integer(2), s)});
  return {d, root};
}

struct Embedded {
  NFElement value;
  bool conjugate;
};

std::vector<Embedded> embed(const NFElement& w, const NumberField& target) {
  if (w.is_rational()) return {{target.from_rational(w.coeffs()[0]), false}};
  if (target.degree() != 2) return {};
  const IntPolynomial& f = target.defining_polynomial();
  if (f.coeff(1) * f.coeff(1) - 4 * f.coeff(0) <= 0) return {};
  const auto [d_src, r_src] = sqrt_of_squarefree_disc(w.field());
  const auto [d_dst, r_dst] = sqrt_of_squarefree_disc(target);
  if (d_src != d_dst) return {};
  // w = a + b * r_src with rational a, b.
  const Rational b = w.coeffs()[1] / r_src.coeffs()[1];
  const Rational a = w.coeffs()[0] - b * r_src.coeffs()[0];
  const NFElement a_dst = target.from_rational(a);
  const NFElement b_dst = target.from_rational(b);
  return {{a_dst + b_dst * r_dst, false}, {a_dst - b_dst * r_dst, true}};
}

std::vector<std::uint64_t> enlarged_primes(std::uint64_t m, const std::vector<std::uint64_t>& s, const NFElement& tau) {
  std::set<std::uint64_t> out(s.begin(), s.end());
  std::vector<Integer> to_factor{2 * modulus_bound_value(2 * m)};
  if (!tau.is_rational()) {
    const RatPolynomial chi = nf_charpoly(tau);
    const Rational norm = chi.coeff(0);
    to_factor.push_back(norm.get_num());
    to_factor.push_back(norm.get_den());
  }
  for (const Integer& n : to_factor) {
    const IntegerFactorization fac = factor_integer(n, default_factor_bound());
    if (!fac.complete) fail(ErrorKind::FactorBoundExceeded, "could not factor " + to_string(n));
    for (const auto& [p, e] : fac.factors) {
      (void)e;
      out.insert(to_u64(p));
    }
  }
  return {out.begin(), out.end()};
}

void annotate(ExceptionalCandidate& c, std::uint64_t m, const std::vector<std::uint64_t>& s,
              const std::vector<Integer>& excluded, std::uint64_t scan_bound) {
  c.s_integral = is_s_integral(c.value, s);
  if (!c.s_integral) {
    c.status = kStatusNotSIntegral;
    return;
  }
  CertifyOptions options;
  options.prime_cap = scan_bound;
  const WitnessResult result = certify_order_witness(WitnessElement::from_trace(c.value), m, s, options);
  if (const auto* cert = std::get_if<OrderCertificate>(&result)) {
    c.witness_prime = cert->p;
    c.level = cert->level;
    c.status = cert->level == CertificateLevel::PaperCertified ? kStatusPaperWitness : kStatusExcludedWitness;
    return;
  }
  for (const ScanHit& hit : empirical_witness_scan(companion(c.value), m, scan_bound)) {
    if (std::binary_search(s.begin(), s.end(), hit.p)) continue;
    c.witness_prime = hit.p;
    const bool excluded_prime = std::binary_search(excluded.begin(), excluded.end(), from_u64(hit.p));
    c.status = excluded_prime || hit.ramified ? kStatusExcludedWitness : kStatusScanWitness;
    return;
  }
  c.status = kStatusNoWitness;
}

}  // namespace

ExceptionalReport exceptional_trace_candidates(std::uint64_t m, const NumberField& field,
                                               const std::vector<std::uint64_t>& s_in, std::uint64_t exponent_bound,
                                               std::uint64_t scan_bound) {
  const TauField tf = tau_field(m);
  const std::vector<std::uint64_t> s = checked_primes(s_in);
  ExceptionalReport report{m, field, s, enlarged_primes(m, s, tf.tau), tf.tau, exponent_bound, scan_bound,
                           false, 0, {}, 0};
  const SUnitSet units = tf.quadratic ? sunit_solutions_quadratic(*tf.quadratic, report.s0, exponent_bound)
                                      : sunit_solutions_rational(report.s0, exponent_bound);
  report.units_complete = units.complete;
  report.unit_count = units.solutions.size();

  std::vector<Integer> excluded;
  {
    const IntegerFactorization fac = factor_integer(2 * modulus_bound_value(2 * m), default_factor_bound());
    for (const auto& [p, e] : fac.factors) {
      (void)e;
      excluded.push_back(p);
    }
    for (std::uint64_t p : s) excluded.push_back(from_u64(p));
    std::sort(excluded.begin(), excluded.end());
  }

  const NFElement one = tf.tau.field().one();
  for (const SUnitSolution& sol : units.solutions) {
    const NFElement w = (sol.u + sol.u - one) * tf.tau;
    const std::vector<Embedded> images = embed(w, field);
    if (images.empty()) ++report.dropped;
    for (const Embedded& image : images) {
      const bool dup = std::any_of(report.candidates.begin(), report.candidates.end(),
                                   [&](const ExceptionalCandidate& c) { return c.value == image.value; });
      if (!dup) report.candidates.push_back({image.value, sol.u, image.conjugate, false, {}, std::nullopt, std::nullopt});
    }
  }
  std::sort(report.candidates.begin(), report.candidates.end(),
            [](const ExceptionalCandidate& x, const ExceptionalCandidate& y) {
              return x.value.coeffs() < y.value.coeffs();
            });
  for (ExceptionalCandidate& c : report.candidates) annotate(c, m, s, excluded, scan_bound);
  return report;
}

}  // namespace finq
