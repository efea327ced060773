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

#include <benchmark/benchmark.h>

#include "finq/cyclotomic.hpp"
#include "finq/psl2.hpp"
#include "finq/sunit.hpp"
#include "finq/witness.hpp"

using namespace finq;

static void BM_Cyclotomic(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic(n));
}
BENCHMARK(BM_Cyclotomic)->Arg(60)->Arg(210)->Arg(420);

static void BM_ModulusBound(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(modulus_bound(n));
}
BENCHMARK(BM_ModulusBound)->Arg(24)->Arg(60);

static void BM_Psl2OrderPrime(benchmark::State& state) {
  const FiniteField k = FiniteField::prime_field(static_cast<std::uint64_t>(state.range(0)));
  std::uint64_t i = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psl2_order(companion(k.from_u64(i))));
    i = i % (k.order() - 4) + 3;
  }
}
BENCHMARK(BM_Psl2OrderPrime)->Arg(1009)->Arg(1000003);

static void BM_Psl2OrderQuadratic(benchmark::State& state) {
  const FiniteField k = FiniteField::make(199, IntPolynomial({1, 0, 1}));
  std::uint64_t i = k.characteristic();
  for (auto _ : state) {
    benchmark::DoNotOptimize(psl2_order(companion(k.element_at(i))));
    i = i % (k.order() - 1) + 1;
    if (i < k.characteristic()) i = k.characteristic();
  }
}
BENCHMARK(BM_Psl2OrderQuadratic);

static void BM_HasPsl2Order(benchmark::State& state) {
  const FiniteField k = FiniteField::prime_field(1000003);
  const auto g = companion(k.from_u64(12345));
  const std::uint64_t m = psl2_order(g);
  for (auto _ : state) benchmark::DoNotOptimize(has_psl2_order(g, m));
}
BENCHMARK(BM_HasPsl2Order);

static void BM_CertifyTrace(benchmark::State& state) {
  const NumberField q = NumberField::rationals();
  const auto m = static_cast<std::uint64_t>(state.range(0));
  long t = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_order_witness(WitnessElement::from_trace(q.from_rational(t)), m, {}));
    t = t < 500 ? t + 1 : 3;
  }
}
BENCHMARK(BM_CertifyTrace)->Arg(3)->Arg(7)->Arg(12);

static void BM_CertifyFigure8(benchmark::State& state) {
  const NumberField k = NumberField::make(IntPolynomial({1, -1, 1}));
  const GroupPreset g = GroupPreset::make(
      "figure8", k, {}, {{"a", {k.one(), k.one(), k.zero(), k.one()}}, {"b", {k.one(), k.zero(), -k.generator(), k.one()}}});
  const WitnessElement e = WitnessElement::from_word(g, Word::parse("a b a^-1 b^-1"));
  for (auto _ : state) benchmark::DoNotOptimize(certify_order_witness(e, 4, {}));
}
BENCHMARK(BM_CertifyFigure8);

static void BM_VerifyCertificate(benchmark::State& state) {
  const NumberField q = NumberField::rationals();
  const auto r = certify_order_witness(WitnessElement::from_trace(q.from_rational(1234)), 7, {});
  const OrderCertificate c = std::get<OrderCertificate>(r);
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(c));
}
BENCHMARK(BM_VerifyCertificate);

static void BM_SUnitsRational(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sunit_solutions_rational({2, 3, 5}, 12));
}
BENCHMARK(BM_SUnitsRational);

BENCHMARK_MAIN();
