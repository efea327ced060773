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

#include "finq/integer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>

#include "finq/error.hpp"

namespace finq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::ReducibleFactor: return "ReducibleFactor";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::FactorBoundExceeded: return "FactorBoundExceeded";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::DenominatorAtPlace: return "DenominatorAtPlace";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::UnsupportedTauField: return "UnsupportedTauField";
    case ErrorKind::MissingFundamentalUnit: return "MissingFundamentalUnit";
  }
  return "Unknown";
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_decimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return false;
  return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(i), text.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; });
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  return text;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!is_decimal(text)) fail(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    fail(ErrorKind::Parse, "signed denominator in '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool fits_u64(const Integer& value) {
  return value >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& value) {
  if (!fits_u64(value)) fail(ErrorKind::InvalidArgument, "integer does not fit in 64 bits: " + value.get_str());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

Integer from_u64(std::uint64_t value) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t mod) {
  // Extended Euclid on signed 128-bit values.
  __int128 r0 = mod, r1 = a % mod;
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    const __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const __int128 s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) fail(ErrorKind::ZeroElement, "element is not invertible modulo " + std::to_string(mod));
  if (s0 < 0) s0 += mod;
  return static_cast<std::uint64_t>(s0);
}

std::uint64_t reduce_mod(const Integer& value, std::uint64_t mod) {
  if (mod <= std::numeric_limits<unsigned long>::max()) {
    return mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(mod));
  }
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), from_u64(mod).get_mpz_t());
  return to_u64(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These bases are a proven deterministic set for n < 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

U64Factorization factor_u64(std::uint64_t n, std::uint64_t trial_bound) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "cannot factor zero");
  U64Factorization out;
  auto strip = [&](std::uint64_t d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e != 0) out.emplace_back(d, e);
  };
  strip(2);
  std::uint64_t d = 3;
  for (; d <= trial_bound && d <= n / d; d += 2) strip(d);
  if (n > 1) {
    if (d > n / d || is_prime(n)) {
      out.emplace_back(n, 1);
    } else {
      fail(ErrorKind::FactorBoundExceeded,
           "cofactor " + std::to_string(n) + " has no factor below " + std::to_string(trial_bound));
    }
  }
  return out;
}

IntegerFactorization factor_integer(const Integer& n, std::uint64_t trial_bound) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "cannot factor zero");
  IntegerFactorization out;
  Integer rest = abs(n);
  auto strip = [&](unsigned long d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    if (e != 0) out.factors.emplace_back(Integer(d), e);
  };
  strip(2);
  unsigned long d = 3;
  for (; d <= trial_bound && Integer(d) * d <= rest; d += 2) strip(d);
  if (rest > 1) {
    if (Integer(d) * d > rest || is_prime(rest)) {
      out.factors.emplace_back(rest, 1);
    } else {
      out.cofactor = rest;
      out.complete = false;
    }
  }
  return out;
}

bool is_supported_on(const Integer& n, const std::vector<std::uint64_t>& primes) {
  if (n == 0) return false;
  Integer rest = abs(n);
  for (std::uint64_t p : primes) {
    if (p < 2) continue;
    const Integer pz = from_u64(p);
    while (mpz_divisible_p(rest.get_mpz_t(), pz.get_mpz_t()) != 0) rest /= pz;
  }
  return rest == 1;
}

namespace {

std::atomic<std::uint64_t> factor_bound_override{0};

}  // namespace

std::uint64_t default_factor_bound() {
  if (const std::uint64_t v = factor_bound_override.load(std::memory_order_relaxed)) return v;
  static const std::uint64_t bound = [] {
    if (const char* env = std::getenv("FINQ_FACTOR_BOUND")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v >= 2) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{1000000};
  }();
  return bound;
}

void set_default_factor_bound(std::uint64_t bound) {
  if (bound == 1) fail(ErrorKind::InvalidArgument, "factor bound must be at least 2");
  factor_bound_override.store(bound, std::memory_order_relaxed);
}

}  // namespace finq
