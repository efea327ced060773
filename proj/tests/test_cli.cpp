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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "finq/serialization.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = finq::cli::run(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("finq_test_cli_" + name);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("polynomial commands") {
  Run r = run({"cyclotomic", "12"});
  CHECK(r.code == 0);
  CHECK(r.out == "X^4 - X^2 + 1\n");
  r = run({"realcyc", "4"});
  CHECK(r.out == "X^2 - 2\n");
  r = run({"bound", "8"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "16"));
  r = run({"bound", "6", "--bezout"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "12"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == finq::cli::kExitUsage);
  CHECK(run({"bogus"}).code == finq::cli::kExitUsage);
  CHECK(run({"witness", "--trace", "3"}).code == finq::cli::kExitUsage);
  CHECK(run({"witness", "--m", "2", "--trace", "3"}).code == finq::cli::kExitUsage);
  CHECK(run({"witness", "--m", "3", "--trace", "3", "--matrix", "1,1,0,1"}).code == finq::cli::kExitUsage);
  CHECK(run({"witness", "--m", "3", "--matrix", "2,0,0,1"}).code == finq::cli::kExitUsage);
  CHECK(run({"witness", "--m", "3", "--trace", "1/2"}).code == finq::cli::kExitUsage);
  CHECK(run({"exceptional", "--m", "7"}).code == finq::cli::kExitUsage);
  CHECK(run({"verify", temp_file("missing.json").string()}).code == finq::cli::kExitUsage);
}

TEST_CASE("witness and verify") {
  Run r = run({"witness", "--m", "4", "--trace", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "p: 7"));
  CHECK(contains(r.out, "paper-certified"));

  r = run({"witness", "--m", "3", "--trace", "-3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "p: 2"));

  r = run({"witness", "--m", "3", "--trace", "0"});
  CHECK(r.code == finq::cli::kExitNoWitness);

  const auto path = temp_file("cert.json");
  r = run({"witness", "--m", "5", "--trace", "3", "--emit", path.string()});
  CHECK(r.code == 0);
  const std::string text = slurp(path);
  CHECK(text.back() == '\n');
  const finq::OrderCertificate c = finq::parse_certificate(text.substr(0, text.size() - 1));
  CHECK(c.claimed_order == 5);

  r = run({"verify", path.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "accept"));

  finq::OrderCertificate bad = c;
  bad.claimed_order = 10;
  std::ofstream(path) << finq::serialize_certificate(bad);
  r = run({"verify", path.string()});
  CHECK(r.code == finq::cli::kExitRejected);
  CHECK(contains(r.out, "order mismatch"));

  std::ofstream(path) << "{\"version\":1";
  CHECK(run({"verify", path.string()}).code == finq::cli::kExitUsage);
  std::filesystem::remove(path);
}

TEST_CASE("preset words and matrices") {
  Run r = run({"witness", "--m", "4", "--preset", "figure8", "--word", "a b a^-1 b^-1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "p: 7"));
  const auto path = temp_file("word.json");
  CHECK(run({"witness", "--m", "4", "--preset", "figure8", "--word", "a b a^-1 b^-1", "--emit", path.string()}).code ==
        0);
  CHECK(run({"verify", path.string()}).code == 0);
  std::string text = slurp(path);
  text.replace(text.find("\"figure8\""), 9, "\"figure9\"");
  std::ofstream(path) << text;
  r = run({"verify", path.string()});
  CHECK(r.code == finq::cli::kExitRejected);
  CHECK(contains(r.out, "unknown preset label"));
  std::filesystem::remove(path);
  r = run({"witness", "--m", "3", "--preset", "figure8", "--word", "a c"});
  CHECK(r.code == finq::cli::kExitUsage);
  r = run({"witness", "--m", "4", "--matrix", "2,1,1,1"});
  CHECK(r.code == 0);
  CHECK(run({"witness", "--m", "3", "--field", "1,-1,1", "--matrix", "1,0,0:-1,1"}).code == finq::cli::kExitNoWitness);
  r = run({"witness", "--m", "3", "--field", "1,-1,1", "--matrix", "1,0,0:-1,1", "--allow-ramified"});
  CHECK(r.code == 0);
  r = run({"order", "--p", "7", "--matrix", "3,6,1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
}

TEST_CASE("scan, profile, sunit and exceptional output") {
  Run r = run({"scan", "--m", "3", "--trace-range", "-2..2", "--prime-bound", "100", "--threads", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "trace\tm\twitness_prime\tlevel\tverified_order\texceptional_flag\n"
        "-2\t3\t3\tverified\t3\t0\n"
        "-1\t3\t5\tpaper-certified\t3\t0\n"
        "0\t3\t-\t-\t-\t1\n"
        "1\t3\t5\tpaper-certified\t3\t0\n"
        "2\t3\t3\tverified\t3\t0\n");

  r = run({"profile", "--m-range", "2..5", "--matrix", "1,1,0,1", "--prime-bound", "50"});
  CHECK(r.code == 0);
  CHECK(r.out == "m\tfirst_prime\n2\t2\n3\t3\n4\t-\n5\t5\n");

  r = run({"sunit", "--primes", "2,3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "complete: true"));
  CHECK(contains(r.out, "solutions: 21"));
  r = run({"sunit", "--primes", "2", "--json"});
  CHECK(contains(r.out, "\"complete\":true"));
  r = run({"sunit", "--primes", "2", "--field", "sqrt5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "complete: false"));

  r = run({"exceptional", "--m", "3", "--scan-bound", "500"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"no witness up to bound\""));
}

TEST_CASE("config files and the factor bound") {
  const auto path = temp_file("config.txt");
  std::ofstream(path) << "# defaults\nm = 4\ncap = 100\n";
  Run r = run({"--config", path.string(), "witness", "--trace", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "p: 7"));
  // Command-line values win over the file.
  r = run({"--config", path.string(), "witness", "--trace", "3", "--m", "5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "order: 5"));
  std::ofstream(path) << "nonsense = 1\n";
  CHECK(run({"--config", path.string(), "witness", "--m", "3", "--trace", "3"}).code == finq::cli::kExitUsage);
  std::filesystem::remove(path);

  r = run({"--factor-bound", "10", "witness", "--m", "5", "--trace", "1000003"});
  CHECK(r.code == finq::cli::kExitFactorBound);
  r = run({"--factor-bound", "1", "witness", "--m", "5", "--trace", "3"});
  CHECK(r.code == finq::cli::kExitUsage);
  CHECK(run({"witness", "--m", "5", "--trace", "3"}).code == 0);
}
