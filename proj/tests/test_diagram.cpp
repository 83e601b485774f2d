#include <doctest.h>

#include <map>

#include "freeknots/diagram.hpp"
#include "helpers.hpp"

using namespace freeknots;
using testing::D;

TEST_CASE("parse and serialize") {
  const auto d = D("1 2 1 2");
  CHECK(d.component_count() == 1);
  CHECK(d.crossing_count() == 2);
  CHECK(serialize(d) == "1 2 1 2");
  CHECK(serialize(D("  a   b  /  b a ")) == "a b / b a");
  CHECK(serialize(D("()")) == "()");
  CHECK(serialize(D("x x / ()")) == "x x / ()");
  CHECK(D("()").component_length(0) == 0);
}

TEST_CASE("parse errors carry codes") {
  auto code_of = [](const std::string& text) {
    try {
      parse_gauss(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of("1 1 / 1") == ErrorCode::OccurrenceCountNotTwo);
  CHECK(code_of("1 2 1") == ErrorCode::OccurrenceCountNotTwo);
  CHECK(code_of("") == ErrorCode::EmptyInputIsZeroComponents);
  CHECK(code_of("   ") == ErrorCode::EmptyInputIsZeroComponents);
  CHECK(code_of("1 1 /") == ErrorCode::MalformedToken);
  CHECK(code_of("1 ( 1") == ErrorCode::MalformedToken);
}

TEST_CASE("crossing kinds") {
  const auto d = D("O A1 O A2 / A1 A2");
  const auto kinds = classify_crossings(d);
  CHECK(kinds.at("O") == CrossingKind::pure);
  CHECK(kinds.at("A1") == CrossingKind::mixed);
  CHECK(d.mixed_count(0, 1) == 2);
  CHECK_THROWS_AS(d.crossing("Z"), Error);
}

TEST_CASE("halves of a pure crossing") {
  const auto d = D("v a b a v c c b");
  auto [h1, h2] = halves(d, d.crossing("v"));
  CHECK(h1.passages.size() == 3);
  CHECK(h2.passages.size() == 3);
  CHECK(d.label(h1.passages[0]) == "a");
  CHECK(d.label(h2.passages[0]) == "c");
}

TEST_CASE("canonical form matches the brute-force oracle on knots") {
  for (int n = 1; n <= 4; ++n) {
    const auto words = testing::all_knot_words(n);
    std::map<std::string, std::string> lib_to_oracle;
    std::map<std::string, std::string> oracle_to_lib;
    for (const auto& d : words) {
      const auto lib = canonical_text(d);
      const auto ora = oracle::canonical(testing::to_oracle(d));
      CHECK(lib_to_oracle.emplace(lib, ora).first->second == ora);
      CHECK(oracle_to_lib.emplace(ora, lib).first->second == lib);
    }
  }
}

TEST_CASE("canonical form matches the oracle on random links") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const auto a = testing::random_link(rng, 2 + static_cast<int>(rng() % 2), 3);
    const auto b = testing::random_link(rng, a.component_count(), 3);
    for (bool ordered : {false, true}) {
      const bool lib_equal = canonicalize(a, ordered) == canonicalize(b, ordered);
      const bool oracle_equal = oracle::canonical(testing::to_oracle(a), ordered) ==
                                oracle::canonical(testing::to_oracle(b), ordered);
      CHECK(lib_equal == oracle_equal);
      // A diagram is always equal to its own relabelled rotation.
      auto words = a.components();
      for (auto& w : words) {
        if (!w.empty()) std::rotate(w.begin(), w.begin() + 1, w.end());
      }
      CHECK(canonicalize(Diagram(words, a.labels()), ordered) == canonicalize(a, ordered));
    }
  }
}

TEST_CASE("canonical text format") {
  CHECK(canonical_text(D("2 1 2 1")) == "a b a b");
  CHECK(canonical_text(D("()")) == "()");
  CHECK(canonical_text(D("() / x x")) == canonical_text(D("y y / ()")));
  CHECK(canonical_label(0) == "a");
  CHECK(canonical_label(25) == "z");
  CHECK(canonical_label(26) == "aa");
}

TEST_CASE("ordered canonical keeps the first component") {
  const auto a = D("1 1 / 2 3 2 3");
  const auto b = D("2 3 2 3 / 1 1");
  CHECK(canonicalize(a, false) == canonicalize(b, false));
  CHECK(canonicalize(a, true) != canonicalize(b, true));
}

TEST_CASE("split diagrams") {
  CHECK(is_split_diagram(D("1 1 / 2 2")));
  CHECK(is_split_diagram(D("1 1 / ()")));
  CHECK_FALSE(is_split_diagram(D("1 / 1")));
  CHECK_FALSE(is_split_diagram(D("a b / b a")));
  CHECK_THROWS_AS(is_split_diagram(D("1 1")), Error);
  CHECK(mixed_connectivity_groups(D("1 / 1 / 2 2")).size() == 2);
}

TEST_CASE("framed graph round trip") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const auto d = testing::random_link(rng, 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 5));
    const auto g = FramedGraph::from_diagram(d);
    CHECK(g.vertex_count == d.crossing_count());
    CHECK(static_cast<int>(g.edges().size()) == 2 * d.crossing_count());
    CHECK(canonicalize(g.to_diagram(), Symmetry{0, true}) == canonicalize(d, Symmetry{0, true}));
    CHECK(unicursal_components(g).count == d.component_count());
  }
}
