#pragma once

#include <set>
#include <string>
#include <vector>

namespace freeknots {

// Z2-linear combination of canonical diagram texts: adding a term twice
// removes it.
class Z2Set {
 public:
  void toggle(const std::string& term) {
    if (auto it = terms_.find(term); it != terms_.end()) {
      terms_.erase(it);
    } else {
      terms_.insert(term);
    }
  }
  void add(const Z2Set& other) {
    for (const auto& t : other.terms_) toggle(t);
  }

  bool zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool contains(const std::string& term) const { return terms_.count(term) > 0; }
  const std::set<std::string>& terms() const noexcept { return terms_; }
  std::vector<std::string> sorted() const { return {terms_.begin(), terms_.end()}; }

  friend bool operator==(const Z2Set&, const Z2Set&) = default;

 private:
  std::set<std::string> terms_;
};

}  // namespace freeknots
