#pragma once

#include <random>
#include <string>
#include <vector>

#include "freeknots/diagram.hpp"
#include "oracles.hpp"

namespace testing {

inline freeknots::Diagram D(const std::string& text) { return freeknots::parse_gauss(text); }

// Oracle view of a library diagram.
inline oracle::Link to_oracle(const freeknots::Diagram& d) {
  oracle::Link out;
  for (const auto& w : d.components()) {
    oracle::Word word;
    for (int x : w) word.push_back(d.label(x));
    out.push_back(word);
  }
  return out;
}

// All knot words with n chords, without deduplication.
inline std::vector<freeknots::Diagram> all_knot_words(int n) {
  std::vector<freeknots::Diagram> out;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  freeknots::Word w(static_cast<std::size_t>(2 * n), -1);
  auto rec = [&](auto&& self, int next) -> void {
    auto it = std::find(w.begin(), w.end(), -1);
    if (it == w.end()) {
      out.emplace_back(std::vector<freeknots::Word>{w}, labels);
      return;
    }
    *it = next;
    for (auto jt = it + 1; jt != w.end(); ++jt) {
      if (*jt != -1) continue;
      *jt = next;
      self(self, next + 1);
      *jt = -1;
    }
    *it = -1;
  };
  rec(rec, 0);
  return out;
}

// Random link: `crossings` chords with ends spread over `components` words.
inline freeknots::Diagram random_link(std::mt19937_64& rng, int components, int crossings) {
  std::vector<freeknots::Word> words(static_cast<std::size_t>(components));
  std::vector<std::string> labels;
  for (int x = 0; x < crossings; ++x) {
    labels.push_back("c" + std::to_string(x));
    for (int k = 0; k < 2; ++k) {
      auto& w = words[rng() % words.size()];
      w.insert(w.begin() + static_cast<long>(rng() % (w.size() + 1)), x);
    }
  }
  return freeknots::Diagram::compact(std::move(words), labels);
}

}  // namespace testing
