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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "finq/cyclotomic.hpp"
#include "finq/error.hpp"
#include "finq/galois_field.hpp"
#include "finq/number_field.hpp"
#include "finq/psl2.hpp"
#include "finq/scan.hpp"
#include "finq/serialization.hpp"
#include "finq/sunit.hpp"
#include "finq/witness.hpp"

namespace finq::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
  const Integer v = parse_integer(trim(text));
  if (v < 0 || !fits_u64(v)) throw UsageError(what + " out of range: " + std::string(text));
  return to_u64(v);
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) {
    const std::uint64_t p = parse_u64(item, "prime");
    if (!is_prime(p)) throw UsageError(item + " is not prime");
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntPolynomial parse_int_poly(const std::string& text) {
  std::vector<Integer> coeffs;
  for (const auto& item : split(text, ',')) coeffs.push_back(parse_integer(item));
  return IntPolynomial(coeffs);
}

NFElement parse_element(const NumberField& field, const std::string& text) {
  std::vector<Rational> coeffs;
  for (const auto& item : split(text, ':')) coeffs.push_back(parse_rational(item));
  if (coeffs.size() > field.degree())
    throw UsageError("element '" + text + "' has more coefficients than the field degree");
  return field.element(coeffs);
}

Mat2<NFElement> parse_matrix(const NumberField& field, const std::string& text) {
  const auto items = split(text, ',');
  if (items.size() != 4) throw UsageError("--matrix expects four entries a,b,c,d");
  return {parse_element(field, items[0]), parse_element(field, items[1]), parse_element(field, items[2]),
          parse_element(field, items[3])};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

std::filesystem::path preset_dir() {
  if (const char* env = std::getenv("FINQ_PRESET_DIR")) return env;
  return FINQ_PRESET_DIR;
}

// A preset file, or the label of a shipped preset.
GroupPreset load_preset(const std::string& spec) {
  if (std::filesystem::exists(spec)) return parse_preset(read_file(spec));
  const auto shipped = preset_dir() / (spec + ".json");
  if (std::filesystem::exists(shipped)) return parse_preset(read_file(shipped.string()));
  throw UsageError("no preset file or shipped preset named '" + spec + "'");
}

// Shipped presets by label, plus any files named with --preset.
PresetResolver preset_resolver(const std::vector<std::string>& files) {
  std::vector<GroupPreset> extra;
  for (const std::string& f : files) extra.push_back(parse_preset(read_file(f)));
  return [extra = std::move(extra)](std::string_view label) -> std::optional<GroupPreset> {
    for (const GroupPreset& g : extra) {
      if (g.label == label) return g;
    }
    const auto shipped = preset_dir() / (std::string(label) + ".json");
    if (label.find('/') != std::string_view::npos || !std::filesystem::exists(shipped)) return std::nullopt;
    GroupPreset g = parse_preset(read_file(shipped.string()));
    if (g.label != label) return std::nullopt;
    return g;
  };
}

std::pair<Integer, Integer> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) throw UsageError("range must look like A..B");
  return {parse_integer(trim(text.substr(0, pos))), parse_integer(trim(text.substr(pos + 2)))};
}

std::pair<std::uint64_t, std::uint64_t> parse_u64_range(const std::string& text) {
  const auto [lo, hi] = parse_range(text);
  if (lo < 1 || hi < lo || !fits_u64(hi)) throw UsageError("bad range " + text);
  return {to_u64(lo), to_u64(hi)};
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (auto v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

// Options shared by the commands that take an element.
struct ElementOptions {
  std::string trace, matrix, preset, word, field;

  void add_to(CLI::App* app) {
    app->add_option("--trace", trace, "Trace t; the element is the companion matrix [[t,-1],[1,0]]");
    app->add_option("--matrix", matrix, "Entries a,b,c,d");
    app->add_option("--preset", preset, "Preset file or shipped preset label (sl2z, figure8)");
    app->add_option("--word", word, "Word in the preset generators, e.g. \"a b a^-1 b^-1\"");
    app->add_option("--field", field, "Defining polynomial coefficients c0,c1,...,1 (default: Q)");
  }

  // Returns the element and the primes S attached to its preset.
  std::pair<WitnessElement, std::vector<std::uint64_t>> build() const {
    const int chosen = !trace.empty() + !matrix.empty() + !preset.empty();
    if (chosen != 1) throw UsageError("give exactly one of --trace, --matrix or --preset/--word");
    if (!preset.empty()) {
      if (word.empty()) throw UsageError("--preset needs --word");
      if (!field.empty()) throw UsageError("--field cannot be combined with --preset");
      GroupPreset group = load_preset(preset);
      std::vector<std::uint64_t> s = group.s;
      return {WitnessElement::from_word(std::move(group), Word::parse(word)), s};
    }
    if (!word.empty()) throw UsageError("--word needs --preset");
    const NumberField k = field.empty() ? NumberField::rationals() : NumberField::make(parse_int_poly(field));
    if (!trace.empty()) return {WitnessElement::from_trace(parse_element(k, trace)), {}};
    return {WitnessElement::from_matrix(parse_matrix(k, matrix)), {}};
  }
};

std::vector<std::uint64_t> merge(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

void print_certificate(const OrderCertificate& c, std::ostream& out) {
  out << "p: " << c.p << '\n';
  out << "place: " << to_string(c.place_factor, 'x') << " (residue degree " << c.residue_degree
      << (c.ramified ? ", ramified" : "") << ")\n";
  out << "order: " << c.claimed_order << '\n';
  out << "level: " << to_string(c.level) << '\n';
  out << "epsilon: " << (c.epsilon ? std::to_string(*c.epsilon) : "none") << '\n';
  out << "N: " << to_string(c.modulus) << '\n';
}

// Appends `--key value` for config entries not already given on the command line.
std::vector<std::string> apply_config(std::vector<std::string> args, const std::string& path, const CLI::App& app) {
  const CLI::App* sub = nullptr;
  std::size_t sub_pos = args.size();
  for (std::size_t i = 0; i < args.size() && !sub; ++i) {
    for (const CLI::App* candidate : app.get_subcommands([](const CLI::App*) { return true; })) {
      if (candidate->get_name() == args[i]) {
        sub = candidate;
        sub_pos = i;
        break;
      }
    }
  }
  auto given = [&args](const std::string& flag) {
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  std::istringstream in(read_file(path));
  std::string line;
  std::vector<std::string> global, local;
  for (int number = 1; std::getline(in, line); ++number) {
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(number) + ": expected key=value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    const std::string flag = "--" + key;
    if (given(flag)) continue;
    const CLI::Option* opt = sub ? sub->get_option_no_throw(flag) : nullptr;
    std::vector<std::string>* target = &local;
    if (!opt) {
      opt = app.get_option_no_throw(flag);
      target = &global;
    }
    if (!opt || key == "config") throw UsageError(path + ": unknown key '" + key + "'");
    if (opt->get_expected_min() == 0) {
      if (value == "true" || value == "1" || value == "yes") target->push_back(flag);
    } else {
      target->push_back(flag);
      target->push_back(value);
    }
  }
  args.insert(args.end(), local.begin(), local.end());
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(std::min(sub_pos, args.size())), global.begin(), global.end());
  return args;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finitistic orders of matrix group elements: witnesses, certificates and scans", "finq"};
  app.require_subcommand(1);
  std::string config;
  std::uint64_t factor_bound = 0;
  app.add_option("--config", config, "key=value file supplying defaults for flags");
  app.add_option("--factor-bound", factor_bound, "Trial-division bound (also FINQ_FACTOR_BOUND)");

  std::uint64_t cyc_n = 0;
  auto* cyc = app.add_subcommand("cyclotomic", "Print the cyclotomic polynomial Phi_n");
  cyc->add_option("n", cyc_n)->required();

  std::uint64_t real_m = 0;
  auto* realcyc = app.add_subcommand("realcyc", "Print the minimal polynomial of 2cos(pi/m)");
  realcyc->add_option("m", real_m)->required();

  std::uint64_t bound_n = 0;
  bool bound_bezout = false;
  auto* bound = app.add_subcommand("bound", "Print the modulus N(n)");
  bound->add_option("n", bound_n)->required();
  bound->add_flag("--bezout", bound_bezout, "Also print the Bezout relations");

  ElementOptions wit_el;
  std::uint64_t wit_m = 0, wit_cap = 100000;
  std::string wit_s, wit_emit;
  bool wit_ramified = false, wit_verbose = false;
  auto* witness = app.add_subcommand("witness", "Search for a certified order-m witness");
  witness->add_option("--m", wit_m, "Target order m > 2")->required();
  wit_el.add_to(witness);
  witness->add_option("--S", wit_s, "Primes inverted in the coefficient ring, p,q,...");
  witness->add_option("--cap", wit_cap, "Largest prime searched");
  witness->add_option("--emit", wit_emit, "Write the certificate JSON to this file");
  witness->add_flag("--allow-ramified", wit_ramified, "Also accept ramified places");
  witness->add_flag("--verbose", wit_verbose, "Print every rejected prime on failure");

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "Re-verify a certificate file");
  verify->add_option("file", verify_file)->required();
  std::vector<std::string> verify_presets;
  verify->add_option("--preset", verify_presets, "Preset file that word certificates may name (repeatable)");

  std::uint64_t scan_m = 0, scan_bound = 100000;
  std::string scan_range, scan_out, scan_s;
  unsigned scan_threads = 0;
  auto* scan = app.add_subcommand("scan", "Certify every integer trace in a range (TSV output)");
  scan->add_option("--m", scan_m)->required();
  scan->add_option("--trace-range", scan_range, "A..B")->required();
  scan->add_option("--prime-bound", scan_bound, "Largest prime searched");
  scan->add_option("--S", scan_s);
  scan->add_option("--out", scan_out, "TSV file (default: stdout)");
  scan->add_option("--threads", scan_threads, "Worker threads (default: all cores)");

  ElementOptions prof_el;
  std::string prof_range;
  std::uint64_t prof_bound = 1000;
  auto* profile = app.add_subcommand("profile", "First witness prime for each m in a range, by exhaustive scan");
  profile->add_option("--m-range", prof_range, "A..B")->required();
  profile->add_option("--prime-bound", prof_bound);
  prof_el.add_to(profile);

  std::uint64_t exc_m = 0, exc_bound = 20, exc_scan = 10000;
  std::string exc_s, exc_field;
  auto* exceptional = app.add_subcommand("exceptional", "Exceptional trace candidates (JSON)");
  exceptional->add_option("--m", exc_m)->required();
  exceptional->add_option("--S", exc_s);
  exceptional->add_option("--bound", exc_bound, "S-unit exponent bound");
  exceptional->add_option("--scan-bound", exc_scan, "Prime bound of the witness scans");
  exceptional->add_option("--field", exc_field, "Defining polynomial of K (default: Q)");

  std::string su_primes, su_field;
  std::uint64_t su_bound = 20;
  bool su_json = false;
  auto* sunit = app.add_subcommand("sunit", "Solutions of u + v = 1 in S-units");
  sunit->add_option("--primes", su_primes, "p,q,...");
  sunit->add_option("--bound", su_bound, "Exponent bound");
  sunit->add_option("--field", su_field, "sqrt2, sqrt3 or sqrt5 (default: Q)");
  sunit->add_flag("--json", su_json);

  std::uint64_t ord_p = 0;
  std::string ord_factor, ord_matrix;
  auto* order = app.add_subcommand("order", "PSL2 order of a matrix over a finite field");
  order->add_option("--p", ord_p)->required();
  order->add_option("--factor", ord_factor, "Irreducible factor c0,c1,...,1 defining F_q (default: x)");
  order->add_option("--matrix", ord_matrix, "Entries a,b,c,d, coefficients of each separated by ':'")->required();

  try {
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) {
        args = apply_config(args, args[i + 1], app);
        break;
      }
      if (args[i].rfind("--config=", 0) == 0) {
        args = apply_config(args, args[i].substr(9), app);
        break;
      }
    }
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (factor_bound != 0) set_default_factor_bound(factor_bound);

    if (cyc->parsed()) {
      out << to_string(cyclotomic(cyc_n), 'X') << '\n';
      return kExitOk;
    }
    if (realcyc->parsed()) {
      out << to_string(real_cyclotomic(real_m), 'X') << '\n';
      return kExitOk;
    }
    if (bound->parsed()) {
      if (!bound_bezout) {
        out << to_string(modulus_bound_value(bound_n)) << '\n';
        return kExitOk;
      }
      const CyclotomicBezout b = modulus_bound(bound_n);
      out << "N: " << to_string(b.modulus) << '\n';
      for (const auto& e : b.entries) {
        out << "d=" << e.d << "  N_d=" << to_string(e.n_d) << "  A=" << to_string(e.a, 'X')
            << "  B=" << to_string(e.b, 'X') << '\n';
      }
      return kExitOk;
    }
    if (witness->parsed()) {
      auto [element, preset_s] = wit_el.build();
      CertifyOptions options;
      options.prime_cap = wit_cap;
      options.allow_ramified = wit_ramified;
      options.factor_bound = default_factor_bound();
      const WitnessResult result =
          certify_order_witness(element, wit_m, merge(parse_primes(wit_s), preset_s), options);
      if (const auto* failure = std::get_if<WitnessFailure>(&result)) {
        if (failure->reason == FailureReason::FactorBoundExceeded) {
          err << "error: factor bound exceeded: " << (failure->diagnostics.empty() ? "" : failure->diagnostics[0])
              << '\n';
          return kExitFactorBound;
        }
        out << "no witness: " << to_string(failure->reason) << '\n';
        const std::size_t shown = wit_verbose ? failure->diagnostics.size()
                                              : std::min<std::size_t>(failure->diagnostics.size(), 20);
        for (std::size_t i = 0; i < shown; ++i) out << "  " << failure->diagnostics[i] << '\n';
        if (shown < failure->diagnostics.size())
          out << "  ... " << failure->diagnostics.size() - shown << " more (use --verbose)\n";
        return kExitNoWitness;
      }
      const auto& cert = std::get<OrderCertificate>(result);
      print_certificate(cert, out);
      const std::string json = serialize_certificate(cert);
      if (wit_emit.empty()) {
        out << "certificate: " << json << '\n';
      } else {
        write_file(wit_emit, json + "\n");
        out << "certificate: written to " << wit_emit << '\n';
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      const std::string text = read_file(verify_file);
      OrderCertificate cert;
      try {
        cert = parse_certificate(text);
      } catch (const Error& e) {
        err << "malformed certificate: " << e.what() << '\n';
        return kExitUsage;
      }
      const VerifyResult result = verify_certificate(cert, preset_resolver(verify_presets));
      if (!result) {
        out << "reject: " << result.reason << '\n';
        return kExitRejected;
      }
      if (trim(text) != serialize_certificate(cert)) err << "note: certificate is not in canonical form\n";
      out << "accept: order " << cert.claimed_order << " at p=" << cert.p << " (" << to_string(cert.level) << ")\n";
      return kExitOk;
    }
    if (scan->parsed()) {
      const auto [lo, hi] = parse_range(scan_range);
      const auto rows = scan_traces(lo, hi, scan_m, scan_bound, parse_primes(scan_s), scan_threads);
      const std::string tsv = to_tsv(rows);
      if (scan_out.empty()) {
        out << tsv;
      } else {
        write_file(scan_out, tsv);
        const auto hits = std::count_if(rows.begin(), rows.end(), [](const TraceScanRow& r) { return !r.exceptional; });
        out << "wrote " << rows.size() << " rows (" << hits << " with witnesses) to " << scan_out << '\n';
      }
      return kExitOk;
    }
    if (profile->parsed()) {
      const auto [lo, hi] = parse_u64_range(prof_range);
      const auto [element, preset_s] = prof_el.build();
      (void)preset_s;
      out << "m\tfirst_prime\n";
      for (const auto& row : finitistic_profile(element.matrix, lo, hi, prof_bound)) {
        out << row.m << '\t' << (row.first_prime ? std::to_string(*row.first_prime) : "-") << '\n';
      }
      return kExitOk;
    }
    if (exceptional->parsed()) {
      const NumberField k = exc_field.empty() ? NumberField::rationals() : NumberField::make(parse_int_poly(exc_field));
      out << serialize_report(exceptional_trace_candidates(exc_m, k, parse_primes(exc_s), exc_bound, exc_scan)) << '\n';
      return kExitOk;
    }
    if (sunit->parsed()) {
      const std::vector<std::uint64_t> primes = parse_primes(su_primes);
      const SUnitSet units = su_field.empty() ? sunit_solutions_rational(primes, su_bound)
                                              : sunit_solutions_quadratic(quadratic_preset(su_field), primes, su_bound);
      if (su_json) {
        out << serialize_sunits(units) << '\n';
        return kExitOk;
      }
      out << "S: {" << join(units.primes) << "}\n";
      out << "complete: " << (units.complete ? "true" : "false") << '\n';
      out << "solutions: " << units.solutions.size() << '\n';
      for (const auto& sol : units.solutions) out << to_string(sol.u) << '\n';
      return kExitOk;
    }
    if (order->parsed()) {
      if (!is_prime(ord_p)) throw UsageError("--p must be prime");
      const IntPolynomial factor = ord_factor.empty() ? IntPolynomial({0, 1}) : parse_int_poly(ord_factor);
      const FiniteField k = FiniteField::make(ord_p, factor);
      const auto items = split(ord_matrix, ',');
      if (items.size() != 4) throw UsageError("--matrix expects four entries a,b,c,d");
      std::vector<FFElement> entries;
      for (const auto& item : items) {
        FFElement x = k.zero();
        FFElement power = k.one();
        const auto coeffs = split(item, ':');
        if (coeffs.size() > k.degree()) throw UsageError("entry '" + item + "' has too many coefficients");
        for (const auto& c : coeffs) {
          x += k.from_integer(parse_integer(c)) * power;
          power *= k.generator();
        }
        entries.push_back(x);
      }
      const Mat2<FFElement> g{entries[0], entries[1], entries[2], entries[3]};
      if (!is_unimodular(g)) throw UsageError("matrix does not have determinant 1");
      out << psl2_order(g) << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::FactorBoundExceeded ? kExitFactorBound : kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace finq::cli
