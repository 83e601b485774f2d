#include <doctest.h>

#include <fstream>
#include <sstream>

#include "freeknots/cli.hpp"
#include "helpers.hpp"

using namespace freeknots;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parity subcommand") {
  auto r = run({"parity", "--rule", "gaussian", "1 2 1 2"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"1\":1,\"2\":1}\n");
  r = run({"parity", "--rule", "pL", "O A1 O A2 / A1 A2", "--component", "0"});
  CHECK(r.out == "{\"O\":1}\n");
}

TEST_CASE("domain and usage errors") {
  auto r = run({"parse", "1 1 / 1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("OccurrenceCountNotTwo") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"parity", "--rule", "other", "1 1"}).code == 2);
  CHECK(run({"parse"}).code == 2);
}

TEST_CASE("subcommands produce JSON") {
  CHECK(run({"canon", "2 1 2 1"}).out == "{\"canonical\":\"a b a b\"}\n");
  CHECK(run({"bracket", "1 2 1 2"}).out.find("\"terms\":[\"()\"]") != std::string::npos);
  CHECK(run({"delta", "1 2 1 2"}).out.find("\"terms\":[]") != std::string::npos);
  CHECK(run({"cover", "--emit", "kprime", "1 2 1 2"}).out.find("\"canonical\":\"()\"") != std::string::npos);
  CHECK(run({"equiv", "a b / b a", "() / ()"}).out.find("\"verdict\":\"equivalent\"") != std::string::npos);
  CHECK(run({"enumerate", "--max-chords", "1"}).out.find("\"code\":\"a a\"") != std::string::npos);
  CHECK(run({"enumerate", "--max-chords", "9"}).code == 1);
}

TEST_CASE("orbits are reproducible") {
  const std::vector<std::string> args{"orbit", "1 2 1 2", "--seed", "7", "--length", "8", "--invariants",
                                      "gaussian-parity-axioms,bracket,delta"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"verdict\":\"all-equal\"") != std::string::npos);
  CHECK(run({"orbit", "()", "--length", "10", "--invariants", "bracket"}).out.find("all-equal") != std::string::npos);
}

TEST_CASE("corpus files") {
  CHECK(parse_corpus("# comment\n\nk1 knot: 1 1\nk2: 1 2 1 2\n").size() == 2);
  CHECK(parse_corpus("k1 a b: 1 1\n")[0].tags == std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(parse_corpus("k: 1 1\nk: 2 2\n"), Error);
  const std::string path = "corpus_test.txt";
  std::ofstream(path) << "b: 1 2 1 2\na: 1 1\n";
  const auto r = run({"canon", "--corpus", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"name\":\"a\"") < r.out.find("\"name\":\"b\""));
}
