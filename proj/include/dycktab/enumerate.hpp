#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <vector>

#include "dycktab/insertion.hpp"
#include "dycktab/word.hpp"

namespace dycktab {

std::uint64_t factorial(int n);
std::uint64_t catalan(int n);

/// Calls fn for every history table of size n, in ascending lexicographic
/// order. There are n! of them.
void for_each_history(int n, const std::function<void(const HistoryTable&)>& fn);

/// Range over all weighted Dyck words of size n, each exactly once, in
/// lexicographic order of their history tables. Words are materialized
/// lazily, so advancing past unwanted elements is cheap.
class WordRange {
 public:
  explicit WordRange(int n) : n_(n) {}

  class iterator {
   public:
    using value_type = WeightedDyckWord;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(int n);

    const WeightedDyckWord& operator*() const;
    iterator& operator++();
    void operator++(int) { ++*this; }

    const HistoryTable& history() const { return history_; }

    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    int n_ = 0;
    bool done_ = true;
    HistoryTable history_;
    mutable std::optional<WeightedDyckWord> word_;  // lazily materialized
  };

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return std::default_sentinel; }

 private:
  int n_ = 0;
};

/// Convenience eager form of WordRange.
std::vector<WeightedDyckWord> all_words(int n);

}  // namespace dycktab
