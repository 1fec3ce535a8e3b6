//  Copyright 2026 the mpcalc authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mpcalc/cli.hpp"
#include "mpcalc/gen.hpp"
#include "mpcalc/grothendieck.hpp"

using namespace mpcalc;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string value_of(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  }
  return {};
}

}  // namespace

TEST_CASE("leq exit codes track the decision") {
  RunResult r = run({"leq", "--ring", "F3", "[|2x2[1,0;0,0]]", "[|1x2[1,1]]"});
  CHECK(r.code == 1);

  RunResult ok = run({"--format", "structured", "leq", "--ring", "F5", "[|1x2[1,1]]",
                      "[|1x2[2,2]]"});
  CHECK(ok.code == 0);
  CHECK(!value_of(ok.out, "cert").empty());

  // --format may follow the subcommand as well
  RunResult late = run({"leq", "--ring", "F5", "--format", "structured", "[|1x2[1,1]]",
                        "[|1x2[2,2]]"});
  CHECK(late.code == 0);
  CHECK(!value_of(late.out, "cert").empty());
}

TEST_CASE("homology subcommand prints the group") {
  RunResult r = run({"homology", "--field", "F5", "--dim", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "Z/2\n");
  RunResult h0 = run({"homology", "--field", "F3", "--dim", "0"});
  CHECK(h0.out == "Z\n");
  RunResult b = run({"--format", "structured", "homology", "--field", "F2", "--dim", "1",
                     "--emit-boundary"});
  CHECK(b.code == 0);
  CHECK(!value_of(b.out, "boundary2").empty());
}

TEST_CASE("is-top prints the witness") {
  RunResult r = run({"--format", "structured", "is-top", "--ring", "Z", "[1x1[2]|1x1[6]]"});
  CHECK(r.code == 0);
  CHECK(value_of(r.out, "W") == "1x1[3]");
  RunResult no = run({"is-top", "--ring", "Z", "[1x1[2]|1x1[1]]"});
  CHECK(no.code == 1);
}

TEST_CASE("parse errors carry position info and exit 3") {
  RunResult r = run({"is-top", "--ring", "Z", "[1x1[2]1x1[6]]"});
  CHECK(r.code == 3);
  CHECK(r.err.find("position") != std::string::npos);
  RunResult bad_ring = run({"is-top", "--ring", "F9", "[|1x1[1]]"});
  CHECK(bad_ring.code == 3);
}

TEST_CASE("ring capability is validated before dispatch") {
  RunResult r = run({"normalize", "--ring", "Z", "[|1x1[2]]"});
  CHECK(r.code == 3);
  CHECK(r.err.find("field") != std::string::npos);
  RunResult pid = run({"pid-reduce", "--ring", "Z/6", "[|1x1[2]]"});
  CHECK(pid.code == 3);
}

TEST_CASE("structured output round-trips through the parser") {
  Gen gen(51);
  Ring f3 = Ring::prime_field(3);
  for (int t = 0; t < 25; ++t) {
    MatrixPair p = gen.pair(f3, 2);
    MatrixPair q = gen.pair(f3, 2);
    RunResult m = run({"--format", "structured", "meet", "--ring", "F3", p.to_text(),
                       q.to_text()});
    CHECK(m.code == 0);
    MatrixPair back = MatrixPair::parse(f3, value_of(m.out, "pair"));
    CHECK(back == meet(p, q).pair);

    RunResult d = run({"--format", "structured", "dual", "--ring", "F3", p.to_text()});
    CHECK(MatrixPair::parse(f3, value_of(d.out, "pair")) == dual(p));

    RunResult n = run({"--format", "structured", "normalize", "--ring", "F3", p.to_text()});
    CHECK(Matrix::parse(f3, value_of(n.out, "canonical")) == canonical_form(p));
  }
}

TEST_CASE("verify-cert distinguishes mismatch from failure") {
  // valid identity certificate
  RunResult ok = run({"verify-cert", "--ring", "Z", "[1x1[2]|1x1[4]]", "[1x1[2]|1x1[4]]",
                      "1x1[1];1x1[1];1x1[0]"});
  CHECK(ok.code == 0);
  // wrong multiplier: verification fails
  RunResult bad = run({"verify-cert", "--ring", "Z", "[1x1[2]|1x1[4]]", "[1x1[2]|1x1[4]]",
                       "1x1[2];1x1[1];1x1[0]"});
  CHECK(bad.code == 1);
  // wrong shape: usage error
  RunResult shape = run({"verify-cert", "--ring", "Z", "[1x1[2]|1x1[4]]", "[1x1[2]|1x1[4]]",
                         "2x2[1,0;0,1];1x1[1];1x1[0]"});
  CHECK(shape.code == 3);
}

TEST_CASE("map transports pairs between rings") {
  RunResult r = run({"--format", "structured", "map", "--ring", "Z", "--to", "F2",
                     "[1x1[2]|1x1[1]]"});
  CHECK(r.code == 0);
  CHECK(value_of(r.out, "pair") == "[1x1[0]|1x1[1]]");
  RunResult bad = run({"map", "--ring", "Z/6", "--to", "Z/4", "[|1x1[1]]"});
  CHECK(bad.code == 3);
}

TEST_CASE("eval prints the subgroup") {
  RunResult r = run({"--format", "structured", "eval", "--ring", "Z/4", "--module", "4",
                     "--pair", "[1x1[2]|1x1[1]]"});
  CHECK(r.code == 0);
  CHECK(value_of(r.out, "order") == "2");
}

TEST_CASE("k0 subcommands") {
  RunResult inv = run({"--format", "structured", "k0", "invariant", "--ring", "Z",
                       "2x2[2,0;0,3]"});
  CHECK(inv.code == 0);
  CHECK(inv.out.find("6") != std::string::npos);

  RunResult tri = run({"k0", "triangle-check", "--ring", "F5", "2x3[1,2,3;4,0,1]"});
  CHECK(tri.code == 0);

  RunResult gamma_out = run({"k0", "gamma", "--ring", "F3", "[1x1[1]|1x2[0,1]]"});
  CHECK(gamma_out.code == 0);
  CHECK(FormalSum::parse(gamma_out.out).terms().size() == 2);

  RunResult kappa_out = run({"k0", "kappa", "--ring", "F3", "2x2[1,0;0,1]"});
  CHECK(kappa_out.code == 0);
  CHECK(FormalSum::parse(kappa_out.out).terms().size() == 2);
}

TEST_CASE("character reads formal sum files") {
  std::string path = "character_input.txt";
  {
    std::ofstream f(path);
    f << "1 Z:1x1[0]\n-1 Z:1x1[1]\n2 Z:2x2[2,0;0,3]\n";
  }
  RunResult r = run({"--format", "structured", "k0", "character", path});
  CHECK(r.code == 0);
  CHECK(value_of(r.out, "character") == "1");
  std::remove(path.c_str());
}

TEST_CASE("quick suite passes end to end") {
  RunResult r = run({"suite", "run", "--quick", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] 1 ") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("all criteria passed") != std::string::npos);
}

TEST_CASE("usage errors exit 3") {
  RunResult r = run({"nosuchcommand"});
  CHECK(r.code == 3);
  RunResult missing = run({"leq", "--ring", "F3", "[|1x1[1]]"});
  CHECK(missing.code == 3);
}

TEST_CASE("parser fuzz: garbage inputs fail cleanly") {
  Gen gen(71);
  const std::string alphabet = "0123456789x[],;/-|QZF ";
  Ring z = Ring::integers();
  for (int t = 0; t < 500; ++t) {
    std::string s;
    std::size_t len = gen.index(24);
    for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[gen.index(alphabet.size())]);
    try {
      Matrix::parse(z, s);
    } catch (const Error&) {
    } catch (const std::exception&) {
    }
    try {
      MatrixPair::parse(z, s);
    } catch (const Error&) {
    } catch (const std::exception&) {
    }
    RunResult r = run({"is-top", "--ring", "Z", s});
    CHECK((r.code == 0 || r.code == 1 || r.code == 3));
  }
}

TEST_CASE("environment variables override the scale caps") {
  setenv("MPCALC_MAX_Q", "3", 1);
  RunResult capped = run({"homology", "--field", "F5", "--dim", "1"});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("cap") != std::string::npos);
  setenv("MPCALC_MAX_Q", "31", 1);
  RunResult ok = run({"homology", "--field", "F5", "--dim", "1"});
  CHECK(ok.code == 0);
  unsetenv("MPCALC_MAX_Q");
}
