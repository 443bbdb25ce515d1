#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  Result r;
  std::string cmd = std::string(COFIB_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const char* name) { return std::string(FIXTURES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("pcs commands") {
  auto bl = run("pcs blowup -n 2 " + fixture("pcs/one-square.json"));
  REQUIRE(bl.code == 0);
  auto j = json::parse(bl.out);
  CHECK(j["counts"] == json::array({1, 2, 1}));
  CHECK(j["provenance"].size() == 4);

  auto broken = run("pcs validate " + fixture("pcs/broken-closure.json"));
  CHECK(broken.code == 1);
  auto witness = json::parse(broken.out)["violation"];
  REQUIRE(witness.size() == 3);
  CHECK(witness[0] == "c");
  CHECK(witness[2] == "v");

  CHECK(run("pcs validate " + fixture("pcs/malformed.json")).code == 2);
  CHECK(run("pcs validate " + fixture("pcs/missing.json")).code == 2);
  CHECK(run("pcs validate " + fixture("pcs/one-square.json")).code == 0);

  CHECK(run("pcs euclid -n 1 " + fixture("pcs/circle.json")).code == 0);
  auto y = run("pcs euclid -n 1 " + fixture("pcs/y-graph.json"));
  CHECK(y.code == 1);
  CHECK(json::parse(y.out)["counterexample"] == "v");

  auto ve = run("pcs verify -n 2 " + fixture("pcs/two-edge-torus.json"));
  CHECK(ve.code == 0);
  CHECK(json::parse(ve.out)["beta_isomorphism"] == true);

  auto brick = run("pcs brick -e 11");
  CHECK(brick.code == 0);
  CHECK(json::parse(brick.out)["cubes"]["2"].size() == 4);
  CHECK(run("pcs brick -e 2").code == 2);

  auto tikz = run("pcs export --format tikz " + fixture("pcs/closed-square.json"));
  CHECK(tikz.code == 0);
  CHECK(tikz.out.find("\\begin{tikzpicture}") == 0);
  CHECK(run("pcs export --format svg " + fixture("pcs/circle.json")).code == 2);
  CHECK(run("pcs export " + fixture("pcs/circle.json")).out.find("digraph") == 0);
}

TEST_CASE("aut commands") {
  auto lang = run("aut lang -L 2 " + fixture("aut/naive-glue.json"));
  CHECK(lang.code == 0);
  CHECK(json::parse(lang.out)["words"].size() == 7);

  auto cof = run("aut cofrep " + fixture("aut/naive-glue.json"));
  CHECK(cof.code == 0);
  CHECK(json::parse(cof.out)["object"]["states"].size() == 4);

  CHECK(run("aut conditions " + fixture("aut/naive-glue.json")).code == 1);
  auto norm = json::parse(run("aut normalize " + fixture("aut/naive-glue.json")).out);
  CHECK(norm["automaton"]["initial"].size() == 1);

  for (const char* f : {"aut/naive-glue.json", "aut/a-loop.json", "aut/path-ab.json", "aut/relational.json"}) {
    auto v = run(std::string("aut verify ") + fixture(f));
    CHECK_MESSAGE(v.code == 0, f);
  }
  CHECK(run("aut lang -L 2 " + fixture("pcs/circle.json")).code == 2);
}

TEST_CASE("rx and toolkit commands") {
  auto fuzz = run("rx fuzz --seed 7 --count 50 --depth 3 -L 5");
  CHECK(fuzz.code == 0);
  CHECK(fuzz.out.find("0 mismatches") != std::string::npos);
  CHECK(run("rx fuzz --seed 7 --count 50 --depth 3 -L 5").out == fuzz.out);

  auto compiled = run("rx compile 'a|b'");
  CHECK(compiled.code == 0);
  CHECK(json::parse(compiled.out)["automaton"]["edges"].size() == 2);
  CHECK(run("rx compile '0*' --ascii").code == 0);
  CHECK(run("rx compile '(a'").code == 2);

  auto appendix = run("toolkit appendix");
  CHECK(appendix.code == 0);
  CHECK(json::parse(appendix.out)["configurations"].get<int>() >= 50);
  CHECK(run("nonsense").code == 2);
}
