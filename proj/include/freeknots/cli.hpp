#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freeknots/diagram.hpp"
#include "freeknots/moves.hpp"
#include "freeknots/search.hpp"
#include "freeknots/z2.hpp"

namespace freeknots {

struct CorpusEntry {
  std::string name;
  std::string code;
  std::vector<std::string> tags;
};

// Lines "name [tag ...]: code"; blank lines and lines starting with '#' are
// skipped. Names must be unique.
std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<CorpusEntry> load_corpus(const std::string& path);

// Picks a move kind and direction uniformly among those available, then a
// site of that group uniformly.
std::optional<MoveApplication> random_move(const Diagram& d, std::mt19937_64& rng, const MoveCaps& caps);

struct OrbitOptions {
  int max_crossings = 10;
  SearchBudget budget{10, 3, 20000};
};

struct OrbitStep {
  MoveApplication move;
  std::string diagram;
  std::vector<std::pair<std::string, std::string>> values;
};

struct OrbitReport {
  std::uint64_t seed = 0;
  std::string start;
  std::vector<std::string> invariants;
  std::vector<std::pair<std::string, std::string>> initial;
  std::vector<OrbitStep> steps;
  int violation_step = -1;
  std::string violation_invariant;
  // Steps where an equivalence-based comparison was inconclusive.
  int undecided = 0;

  bool all_equal() const noexcept { return violation_step < 0; }
};

// Known invariant names.
const std::vector<std::string>& orbit_invariant_names();

// Applies `length` seeded random moves, recomputing every named invariant
// after each one and stopping at the first violation.
OrbitReport run_orbit(const Diagram& start, std::uint64_t seed, int length, const std::vector<std::string>& invariants,
                      const OrbitOptions& options = {});

// Every knot diagram with `chords` crossings, one per canonical form, in
// canonical text order.
std::vector<Diagram> knot_diagrams(int chords);

struct KnotRecord {
  std::string code;
  int chords = 0;
  bool all_odd = false;
  bool r2_irreducible = false;
  Z2Set bracket;
  std::optional<Z2Set> delta;
};

std::vector<KnotRecord> enumerate_knots(int max_chords, bool with_delta = false);

// Command-line entry point: JSON on `out`, usage messages on `err`.
// Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freeknots
