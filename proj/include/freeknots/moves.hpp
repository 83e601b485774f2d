#pragma once

#include <climits>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "freeknots/diagram.hpp"

namespace freeknots {

enum class MoveKind { R1, R2, R3 };
enum class MoveDirection { increasing, decreasing, neutral };

std::string_view to_string(MoveKind kind) noexcept;
std::string_view to_string(MoveDirection direction) noexcept;

// One Reidemeister move instance.
//
// Decreasing and neutral moves: `site` holds the start position of each
// adjacent occurrence pair (the pair is (p, p+1) cyclically): one pair for
// R1, two for R2, three for R3.
//
// Increasing moves: `site` holds insertion gaps; gap g of a component sits
// before position g. R1 inserts "x x" and R2 inserts "a b" at the first gap
// and "a b" (or "b a" when `reversed`) at the second. When both R2 gaps are
// equal the two pairs are inserted back to back.
//
// `labels` names the crossings involved; for increasing moves these are the
// labels of the new crossings.
struct MoveApplication {
  MoveKind kind = MoveKind::R1;
  MoveDirection direction = MoveDirection::decreasing;
  std::vector<Position> site;
  bool reversed = false;
  std::vector<std::string> labels;

  friend bool operator==(const MoveApplication&, const MoveApplication&) = default;
};

std::string describe(const MoveApplication& m);

struct MoveCaps {
  bool increasing = true;
  int max_crossings = INT_MAX;
  std::size_t max_increasing = SIZE_MAX;
};

// All decreasing and neutral sites, then increasing sites up to the caps.
// The order is deterministic.
std::vector<MoveApplication> enumerate_moves(const Diagram& d, const MoveCaps& caps = {});
std::vector<MoveApplication> decreasing_moves(const Diagram& d);
std::vector<MoveApplication> decreasing_r2_moves(const Diagram& d);
std::vector<MoveApplication> r3_moves(const Diagram& d);

Diagram apply_move(const Diagram& d, const MoveApplication& m);

// The move that undoes `m`, expressed on apply_move(before, m).
MoveApplication inverse_move(const Diagram& before, const MoveApplication& m);

// `count` labels not used by `d`: "1", "2", ... skipping taken names,
// starting after the current crossing count.
std::vector<std::string> fresh_labels(const Diagram& d, int count);

// Crossing ids of `d` touched by a decreasing or neutral move.
std::vector<int> involved_crossings(const Diagram& d, const MoveApplication& m);

}  // namespace freeknots
