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

#include "finq/psl2.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "finq/error.hpp"

namespace finq {

namespace {
constexpr std::uint64_t kPowerCheckLimit = 10000;
}  // namespace

Mat2<NFElement> identity(const NumberField& field) { return {field.one(), field.zero(), field.zero(), field.one()}; }

Mat2<FFElement> identity(const FiniteField& field) { return {field.one(), field.zero(), field.zero(), field.one()}; }

Mat2<NFElement> companion(const NFElement& trace) {
  const NumberField& k = trace.field();
  return {trace, -k.one(), k.one(), k.zero()};
}

Mat2<FFElement> companion(const FFElement& trace) {
  const FiniteField& k = trace.field();
  return {trace, -k.one(), k.one(), k.zero()};
}

bool is_unimodular(const Mat2<NFElement>& g) { return g.det() == g.a.field().one(); }

bool is_unimodular(const Mat2<FFElement>& g) { return g.det().is_one(); }

bool is_plus_minus_identity(const Mat2<NFElement>& g) {
  if (!g.b.is_zero() || !g.c.is_zero() || !(g.a == g.d)) return false;
  const NFElement one = g.a.field().one();
  return g.a == one || g.a == -one;
}

bool is_plus_minus_identity(const Mat2<FFElement>& g) {
  if (!g.b.is_zero() || !g.c.is_zero() || !(g.a == g.d)) return false;
  return g.a.is_one() || (-g.a).is_one();
}

Mat2<FFElement> power(const Mat2<FFElement>& g, std::uint64_t exp) {
  return power(g, exp, identity(g.a.field()));
}

GroupPreset GroupPreset::make(std::string label, NumberField field, std::vector<std::uint64_t> s,
                              std::vector<std::pair<std::string, Mat2<NFElement>>> generators) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (std::uint64_t p : s) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "S contains the non-prime " + std::to_string(p));
  }
  for (const auto& [name, g] : generators) {
    for (const NFElement* entry : {&g.a, &g.b, &g.c, &g.d}) {
      if (!(entry->field() == field)) fail(ErrorKind::InvalidArgument, "generator " + name + " lives in another field");
      if (!is_s_integral(*entry, s))
        fail(ErrorKind::InvalidArgument, "generator " + name + " has an entry that is not S-integral: " + to_string(*entry));
    }
    if (!is_unimodular(g)) fail(ErrorKind::NotUnimodular, "generator " + name + " does not have determinant 1");
  }
  return GroupPreset{std::move(label), std::move(field), std::move(s), std::move(generators)};
}

const Mat2<NFElement>& GroupPreset::generator(std::string_view name) const {
  for (const auto& [n, g] : generators) {
    if (n == name) return g;
  }
  fail(ErrorKind::UnknownGenerator, "unknown generator '" + std::string(name) + "' in preset " + label);
}

Word::Word(std::vector<WordLetter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.exponent == 0) fail(ErrorKind::InvalidArgument, "word exponents must be nonzero");
  }
}

Word Word::parse(std::string_view text) {
  std::vector<WordLetter> letters;
  std::size_t i = 0;
  auto is_sep = [](char ch) { return ch == ' ' || ch == '\t' || ch == '*' || ch == '\n'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (!(std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      fail(ErrorKind::Parse, "bad generator name in word '" + std::string(text) + "'");
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    WordLetter letter{std::string(text.substr(start, i - start)), 1};
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t es = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      const Integer e = parse_integer(text.substr(es, i - es));
      if (e == 0 || !e.fits_slong_p()) fail(ErrorKind::Parse, "bad exponent in word '" + std::string(text) + "'");
      letter.exponent = e.get_si();
    }
    if (i < text.size() && !is_sep(text[i])) fail(ErrorKind::Parse, "malformed word '" + std::string(text) + "'");
    letters.push_back(std::move(letter));
  }
  return Word(std::move(letters));
}

std::string to_string(const Word& word) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : word.letters()) {
    if (!first) os << ' ';
    first = false;
    os << l.name;
    if (l.exponent != 1) os << '^' << l.exponent;
  }
  return os.str();
}

Mat2<NFElement> word_eval(const GroupPreset& preset, const Word& word) {
  Mat2<NFElement> acc = identity(preset.field);
  for (const auto& l : word.letters()) {
    const Mat2<NFElement>& g = preset.generator(l.name);
    const Mat2<NFElement> base = l.exponent > 0 ? g : g.sl2_inverse();
    const std::uint64_t e = l.exponent > 0 ? static_cast<std::uint64_t>(l.exponent)
                                           : static_cast<std::uint64_t>(-(l.exponent + 1)) + 1;
    acc = acc * power(base, e, identity(preset.field));
  }
  if (!is_unimodular(acc)) throw std::logic_error("word value lost determinant one");
  return acc;
}

Mat2<FFElement> mat_reduce(const Mat2<NFElement>& g, const Place& place) {
  static constexpr const char* names[] = {"a", "b", "c", "d"};
  const NFElement* entries[] = {&g.a, &g.b, &g.c, &g.d};
  std::vector<FFElement> out;
  out.reserve(4);
  for (int i = 0; i < 4; ++i) {
    try {
      out.push_back(nf_reduce(*entries[i], place));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DenominatorAtPlace) throw;
      fail(ErrorKind::DenominatorAtPlace, std::string("entry ") + names[i] + ": " + e.what());
    }
  }
  return {out[0], out[1], out[2], out[3]};
}

namespace {

// F_q[Y]/(Y^2 - s*Y + 1) on flat coefficient buffers: an element is a0 + a1*Y
// stored as 2d residues mod p, a0 first. Scratch space is reused across
// products, so powering does not allocate.
class QuadRing {
 public:
  explicit QuadRing(const FFElement& s)
      : p_(s.field().characteristic()),
        d_(s.field().degree()),
        mod_(s.field().modulus_coeffs()),
        s_(s.coeffs()),
        prod_(2 * d_),
        hi_(d_),
        t0_(d_),
        t1_(d_),
        tmp_(2 * d_) {}

  std::vector<std::uint64_t> one() const {
    std::vector<std::uint64_t> x(2 * d_, 0);
    x[0] = 1;
    return x;
  }

  std::vector<std::uint64_t> y() const {
    std::vector<std::uint64_t> x(2 * d_, 0);
    x[d_] = 1;
    return x;
  }

  bool is_one(const std::vector<std::uint64_t>& x) const {
    if (x[0] != 1) return false;
    return std::all_of(x.begin() + 1, x.end(), [](std::uint64_t c) { return c == 0; });
  }

  // out = x * y; out may alias x or y.
  void mul(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y, std::vector<std::uint64_t>& out) {
    const std::uint64_t* x0 = x.data();
    const std::uint64_t* x1 = x.data() + d_;
    const std::uint64_t* y0 = y.data();
    const std::uint64_t* y1 = y.data() + d_;
    ff_mul(x1, y1, hi_.data());
    ff_mul(x0, y0, t0_.data());
    std::uint64_t* a0 = tmp_.data();
    std::uint64_t* a1 = tmp_.data() + d_;
    for (std::size_t i = 0; i < d_; ++i) a0[i] = sub(t0_[i], hi_[i]);
    ff_mul(x0, y1, t0_.data());
    ff_mul(x1, y0, t1_.data());
    for (std::size_t i = 0; i < d_; ++i) a1[i] = add(t0_[i], t1_[i]);
    ff_mul(s_.data(), hi_.data(), t0_.data());
    for (std::size_t i = 0; i < d_; ++i) a1[i] = add(a1[i], t0_[i]);
    std::copy(tmp_.begin(), tmp_.end(), out.begin());
  }

  std::vector<std::uint64_t> pow(std::vector<std::uint64_t> base, std::uint64_t exp) {
    std::vector<std::uint64_t> result = one();
    while (exp != 0) {
      if (exp & 1U) mul(result, base, result);
      exp >>= 1U;
      if (exp != 0) mul(base, base, base);
    }
    return result;
  }

 private:
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a >= p_ - b ? a - (p_ - b) : a + b; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p_ - b); }

  // out = x * y in F_q; out must not alias x or y.
  void ff_mul(const std::uint64_t* x, const std::uint64_t* y, std::uint64_t* out) {
    if (d_ == 1) {
      out[0] = mul_mod(x[0], y[0], p_);
      return;
    }
    std::fill(prod_.begin(), prod_.end(), 0);
    for (std::size_t i = 0; i < d_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < d_; ++j) prod_[i + j] = add(prod_[i + j], mul_mod(x[i], y[j], p_));
    }
    for (std::size_t i = 2 * d_ - 1; i-- > d_;) {
      const std::uint64_t top = prod_[i];
      if (top == 0) continue;
      for (std::size_t j = 0; j < d_; ++j) prod_[i - d_ + j] = sub(prod_[i - d_ + j], mul_mod(top, mod_[j], p_));
    }
    std::copy(prod_.begin(), prod_.begin() + static_cast<std::ptrdiff_t>(d_), out);
  }

  std::uint64_t p_;
  std::size_t d_;
  const fp::Coeffs& mod_;
  const std::vector<std::uint64_t>& s_;
  std::vector<std::uint64_t> prod_, hi_, t0_, t1_, tmp_;
};

}  // namespace

std::uint64_t eigenvalue_order(const FFElement& s, std::uint64_t factor_bound) {
  const FiniteField& k = s.field();
  const FFElement two = k.from_u64(2);
  if (s == two || s == -two) fail(ErrorKind::InvalidArgument, "trace +-2 has a repeated eigenvalue");
  const std::uint64_t q = k.order();
  if (q == std::numeric_limits<std::uint64_t>::max()) fail(ErrorKind::InvalidArgument, "field too large");
  QuadRing ring(s);
  const std::vector<std::uint64_t> y = ring.y();
  std::uint64_t group = q - 1;
  if (k.characteristic() == 2) {
    if (!ring.is_one(ring.pow(y, group))) group = q + 1;
  } else if (!(s * s - two - two).pow((q - 1) / 2).is_one()) {
    group = q + 1;  // eigenvalues lie outside F_q
  }
  std::uint64_t order = 1;
  for (const auto& [r, e] : factor_u64(group, factor_bound)) {
    std::uint64_t r_e = 1;
    for (unsigned i = 0; i < e; ++i) r_e *= r;
    std::vector<std::uint64_t> z = ring.pow(y, group / r_e);
    for (unsigned i = 0; !ring.is_one(z); ++i) {
      if (i == e) throw std::logic_error("eigenvalue order does not divide q^2 - 1");
      z = ring.pow(std::move(z), r);
      order *= r;
    }
  }
  return order;
}

std::uint64_t psl2_order(const Mat2<FFElement>& g, std::uint64_t factor_bound) {
  if (!is_unimodular(g)) fail(ErrorKind::NotUnimodular, "matrix does not have determinant 1");
  if (is_plus_minus_identity(g)) return 1;
  const FiniteField& k = g.a.field();
  const FFElement t = g.trace();
  const FFElement two = k.from_u64(2);
  if (t == two || t == -two) return k.characteristic();
  const std::uint64_t r = eigenvalue_order(t, factor_bound);
  const std::uint64_t order = r % 2 == 1 ? r : r / 2;
  if (k.order() <= kPowerCheckLimit && !is_plus_minus_identity(power(g, order)))
    throw std::logic_error("eigenvalue order disagrees with powering");
  return order;
}

std::uint64_t psl2_order_by_powering(const Mat2<FFElement>& g, std::uint64_t limit) {
  if (!is_unimodular(g)) fail(ErrorKind::NotUnimodular, "matrix does not have determinant 1");
  Mat2<FFElement> h = g;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (is_plus_minus_identity(h)) return k;
    h = h * g;
  }
  fail(ErrorKind::InvalidArgument, "no PSL2 order found below the powering limit");
}

bool has_psl2_order(const Mat2<FFElement>& g, std::uint64_t m) {
  if (m == 0 || !is_unimodular(g)) return false;
  if (!is_plus_minus_identity(power(g, m))) return false;
  for (const auto& [r, e] : factor_u64(m, default_factor_bound())) {
    (void)e;
    if (is_plus_minus_identity(power(g, m / r))) return false;
  }
  return true;
}

std::uint64_t psl2_order_from_trace(const FiniteField& field, const FFElement& alpha, int sign) {
  if (!(alpha.field() == field)) fail(ErrorKind::InvalidArgument, "alpha is not an element of the given field");
  if (sign != 1 && sign != -1) fail(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  const std::uint64_t r = ff_mult_order(alpha);
  if (r % 2 != 0) fail(ErrorKind::OddOrder, "alpha has odd multiplicative order " + std::to_string(r));
  const std::uint64_t m = r / 2;
  if (m < 2) fail(ErrorKind::InvalidArgument, "alpha = -1 gives a parabolic trace; need order 2m with m > 1");
  FFElement s = alpha + alpha.inverse();
  if (sign < 0) s = -s;
  const std::uint64_t direct = psl2_order(companion(s));
  if (direct != m) throw std::logic_error("companion order disagrees with the eigenvalue order");
  return m;
}

}  // namespace finq
