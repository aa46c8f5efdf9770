// Copyright 2026 The Authors.
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracle.hpp"
#include "qlift/cli.hpp"
#include "qlift/enumeration.hpp"
#include "qlift/error.hpp"
#include "qlift/text_format.hpp"

using namespace qlift;
using oracle::F;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "qlift-cli-test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("text format") {

TEST_CASE("parse a document") {
  const Matroid m =
      parse_matroid_text("matroid U23\nground a b c\ncircuit a b c\nend\n");
  CHECK(m == Matroid::uniform(2, 3));
}

TEST_CASE("comments and blank lines are ignored") {
  const Matroid m = parse_matroid_text(
      "# header\n\nmatroid\n  ground a b c   # labels\ncircuit a b c\nend\n");
  CHECK(m == Matroid::uniform(2, 3));
}

TEST_CASE("parse errors") {
  CHECK(kind_of([] { parse_matroid_text("matroid\nground a a b\nend\n"); }) ==
        ErrorKind::DuplicateLabel);
  CHECK(kind_of([] {
          parse_matroid_text("matroid\nground a b c\ncircuit a d\nend\n");
        }) == ErrorKind::UnknownLabel);
  CHECK(kind_of([] { parse_matroid_text("matroid\nground a b c\n"); }) ==
        ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_matroid_text("ground a b\nend\n"); }) ==
        ErrorKind::SyntaxError);
  CHECK(kind_of([] {
          parse_matroid_text("matroid\nground a b c\ncircuit a b\ncircuit a c\nend\n");
        }) == ErrorKind::EliminationFailure);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_matroid_text("matroid\nground a b\nbogus a\nend\n");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("axiom errors name the source lines") {
  try {
    parse_matroid_text("matroid\nground a b c\ncircuit a b\ncircuit a b c\nend\n");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClutter);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("serialization") {
  CHECK(serialize_matroid_text(Matroid::uniform(2, 3), "U23") ==
        "matroid U23\nground a b c\ncircuit a b c\nend\n");
  CHECK(serialize_matroid_text(Matroid::free(3)) ==
        "matroid\nground a b c\nend\n");
  const std::string u24 = serialize_matroid_text(Matroid::uniform(2, 4));
  CHECK(serialize_matroid_text(parse_matroid_text(u24)) == u24);
}

TEST_CASE("round trip on every catalog entry, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const Matroid& m : catalog(n).entries) {
      const std::string text = serialize_matroid_text(m);
      CHECK(parse_matroid_text(text) == m);
      CHECK(parse_catalog_line(catalog_line(m)) == m);
    }
  }
}

TEST_CASE("catalog lines") {
  CHECK(catalog_line(Matroid::uniform(2, 3)) == "n=3;rank=2;circuits=012");
  CHECK(catalog_line(Matroid::free(2)) == "n=2;rank=2;circuits=-");
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
  const GroundSet abc = GroundSet::letters(3);
  const std::string u13 =
      write("U13.m", serialize_matroid_text(Matroid::uniform(1, abc)));
  const std::string u23 =
      write("U23.m", serialize_matroid_text(Matroid::uniform(2, abc)));
  const std::string u24 =
      write("U24.m", serialize_matroid_text(Matroid::uniform(2, 4)));

  const Run yes = run({"quotient", u13, u23});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("{a,b,c} <- {a,b} {a,c} {b,c}") != std::string::npos);

  const Run no = run({"quotient", u23, u13});
  CHECK(no.code == 1);
  CHECK(no.out.find("{a,b}") != std::string::npos);

  CHECK(run({"lift", "bad-args"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"rank", (scratch() / "missing.m").string()}).code == 2);
  CHECK(run({"rank", u24}).out == "rank 2\n");
  CHECK(run({"cyclic-sets", u13}).out == "{}\n{a,b}\n{a,c}\n{b,c}\n{a,b,c}\n");
  CHECK(run({"enumerate", "--n", "2", "--method", "matrix"}).code == 2);
}

TEST_CASE("lift and factor write documents") {
  const GroundSet abc = GroundSet::letters(3);
  const std::string u13 =
      write("U13.m", serialize_matroid_text(Matroid::uniform(1, abc)));
  const std::string f3 = write("F3.m", serialize_matroid_text(Matroid::free(3)));
  const auto dir = scratch() / "factor";
  std::filesystem::remove_all(dir);
  const Run r =
      run({"factor", u13, f3, "--labels", "x1,x2", "--out", dir.string()});
  REQUIRE(r.code == 0);
  for (const char* name : {"N.m", "L0.m", "L1.m", "L2.m"}) {
    CHECK(std::filesystem::exists(dir / name));
  }
  std::ifstream in(dir / "L1.m");
  const std::string l1((std::istreambuf_iterator<char>(in)), {});
  CHECK(parse_matroid_text(l1) == Matroid::uniform(2, 3));
}

TEST_CASE("output is deterministic") {
  const std::string u24 =
      write("U24.m", serialize_matroid_text(Matroid::uniform(2, 4)));
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"dual", u24},
           {"check-lemmas", u24},
           {"minor", u24, "--contract", "a"},
           {"enumerate", "--n", "3"},
           {"pairs", "--n", "2"}}) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

}  // TEST_SUITE
