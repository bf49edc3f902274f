#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dycktab/insertion.hpp"
#include "dycktab/word.hpp"

namespace dycktab {

/// A permutation in one-line notation, values 1..n.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless one_line is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> one_line);

  int size() const { return static_cast<int>(one_line_.size()); }
  const std::vector<int>& one_line() const { return one_line_; }
  /// sigma(i), 1-based.
  int value_at(int pos) const { return one_line_.at(static_cast<size_t>(pos - 1)); }
  /// sigma^{-1}(value), 1-based.
  int position_of(int value) const { return inverse_.at(static_cast<size_t>(value - 1)); }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> one_line_;
  std::vector<int> inverse_;
};

/// Comma-separated one-line notation, e.g. "2,4,1,5,3". Empty string for
/// the size-0 permutation.
Permutation parse_permutation(const std::string& text);
std::string serialize_permutation(const Permutation& sigma);

/// The three value-constrained pattern kinds: a subword ab with a = b+1,
/// and subwords abc with a = c+1 and either b < c or b > a.
enum class PatternKind { TwoPlusTwo, TwoPlusOneTwo, OnePlusTwoOne };

struct PatternMatches {
  PatternKind kind = PatternKind::TwoPlusTwo;
  /// Value tuples in reading order, listed by position of their leftmost
  /// letter (ties broken by the later letters' positions).
  std::vector<std::vector<int>> occurrences;

  int count() const { return static_cast<int>(occurrences.size()); }
};

/// Brute-force enumeration over value pairs (a, a-1) and the positions
/// between them.
PatternMatches count_patterns(const Permutation& sigma, PatternKind kind);

/// Non-inversion table: entry i counts the positions left of value i that
/// hold smaller values. Has the history-table shape.
HistoryTable non_inversion_table(const Permutation& sigma);

/// The bijection phi: the permutation whose non-inversion table is the
/// history table of w.
Permutation permutation_of(const WeightedDyckWord& w);

/// Record of a direct dot-insertion run of phi^{-1}.
struct DotInsertionTrace {
  int ribbons = 0;
  /// After each step j, the (lb, rb) pair of every occupied column slot.
  std::vector<std::vector<std::optional<std::pair<Step, Step>>>> borders_after_step;
};

/// phi^{-1} by the direct dot-insertion construction: the columns are
/// labeled by the entries of sigma and dots are placed for values 1..n in
/// order, adding a ribbon whenever a dot lands left of the previous one.
/// Deliberately independent of from_history so the two routes cross-check
/// each other.
WeightedDyckWord tableau_of(const Permutation& sigma, DotInsertionTrace* trace = nullptr);

/// Right-to-left / left-to-right running extrema of sigma, as value sets.
/// These scan the permutation directly and serve as oracles for the
/// tableau-side characterizations.
std::set<int> rl_minima_of(const Permutation& sigma);
std::set<int> rl_maxima_of(const Permutation& sigma);
std::set<int> lr_minima_of(const Permutation& sigma);
std::set<int> lr_maxima_of(const Permutation& sigma);

}  // namespace dycktab
