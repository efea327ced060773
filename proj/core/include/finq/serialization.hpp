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

#include <string>
#include <string_view>

#include "finq/psl2.hpp"
#include "finq/sunit.hpp"
#include "finq/witness.hpp"

namespace finq {

/// Canonical certificate JSON: sorted keys, no whitespace, every integer a
/// decimal string, "version": 1.
std::string serialize_certificate(const OrderCertificate& certificate);

/// Strict inverse of serialize_certificate. Unknown or missing keys,
/// non-canonical numbers and wrong types all throw Parse, so a parsed
/// certificate always re-serializes to the same bytes.
OrderCertificate parse_certificate(std::string_view text);

/// Preset file: {"label", "field": {"poly"}, "S", "generators"}. Numbers may
/// be given as JSON integers or decimal/rational strings. The group is
/// validated on load (InvalidArgument, NotUnimodular); syntax errors throw Parse.
GroupPreset parse_preset(std::string_view text);
std::string serialize_preset(const GroupPreset& preset);

/// Report JSON with the same conventions as certificates (not parsed back).
std::string serialize_report(const ExceptionalReport& report);

/// {"primes", "basis", "complete", "solutions": [{"u", "sign", "exponents"}]}.
std::string serialize_sunits(const SUnitSet& units);

}  // namespace finq
