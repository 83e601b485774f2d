#include <doctest.h>

#include "freeknots/parity.hpp"
#include "helpers.hpp"

using namespace freeknots;
using testing::D;

TEST_CASE("gaussian parity counts linked chords") {
  const auto d = D("1 2 1 2");
  CHECK(gaussian_parity(d, 0) == 1);
  CHECK(gaussian_parity(d, 1) == 1);
  for (auto [x, p] : gaussian_parities(D("1 2 3 1 2 3"))) CHECK(p == 0);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& k : testing::all_knot_words(n)) {
      const auto w = testing::to_oracle(k)[0];
      int odd = 0;
      for (auto [x, p] : gaussian_parities(k)) {
        CHECK(p == oracle::gaussian_parity(w, k.label(x)));
        odd += p;
      }
      CHECK(odd % 2 == 0);
    }
  }
}

TEST_CASE("p_L on the minimal example") {
  const auto d = D("O A1 O A2 / A1 A2");
  const auto bits = p_L_parities(d);
  REQUIRE(bits.size() == 1);
  CHECK(bits.at(d.crossing("O")) == 1);
}

TEST_CASE("p_L matches the oracle") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int round = 0; round < 400; ++round) {
    const auto d = testing::random_link(rng, 2, 5);
    if (d.mixed_count(0, 1) % 2 != 0) continue;
    for (auto [x, p] : p_L_parities(d)) {
      CHECK(p == oracle::pl_parity(testing::to_oracle(d), d.label(x)));
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("p_L errors") {
  auto code_of = [](const Diagram& d, const std::string& x) {
    try {
      p_L(d, d.crossing(x));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of(D("v v"), "v") == ErrorCode::NotTwoComponents);
  CHECK(code_of(D("v a v / a"), "v") == ErrorCode::OddMixedCount);
  CHECK(code_of(D("O A1 O A2 / A1 A2"), "A1") == ErrorCode::NotPure);
}

TEST_CASE("cycle basis of L") {
  CHECK(cycle_basis(D("O A1 O A2 / A1 A2")).cycles.empty());
  const auto d = D("v m1 v m2 / x m1 y x m2 y");
  const auto basis = cycle_basis(d);
  const int e = static_cast<int>(basis.graph.edges.size());
  const int v = static_cast<int>(basis.graph.vertices.size());
  CHECK(static_cast<int>(basis.cycles.size()) == e - v + 1);
  for (const auto& c : basis.cycles) {
    CHECK(c.valid == (c.intersections % 2 == 0));
    if (c.valid) CHECK((homology_parity(d, d.crossing("v"), basis, c) == 0 || homology_parity(d, d.crossing("v"), basis, c) == 1));
  }
}

TEST_CASE("parity axioms hold on every move of small knots") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& k : testing::all_knot_words(n)) {
      for (const auto& m : enumerate_moves(k, {true, n + 2, SIZE_MAX})) {
        const auto report = check_parity_axioms(ParityRule::gaussian, k, m);
        CHECK_MESSAGE(report.pass, serialize(k) << " " << describe(m));
      }
    }
  }
}
