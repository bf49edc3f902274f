#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "dycktab/insertion.hpp"
#include "dycktab/permutation.hpp"
#include "dycktab/word.hpp"

namespace dycktab {

/// Box-level statistics of a tableau. Shadow boxes sit below a dot in its
/// column, clear boxes above; ribbons are read off the history table.
struct BoxStatistics {
  int ribbons = 0;
  int shadow = 0;
  int clear = 0;
  std::vector<int> per_column_shadow;
  std::vector<int> per_column_clear;

  bool operator==(const BoxStatistics&) const = default;
};

/// Statistics of the tree-like tableau sharing the insertion table.
struct TltStats {
  int ribbons = 0;
  int left_sons = 0;
  int crossing_boxes = 0;

  bool operator==(const TltStats&) const = default;
};

/// Running extrema read off the tableau, reported as value sets, plus the
/// columns of the entries 1 and n.
struct ExtremaReport {
  std::set<int> rl_minima;
  std::set<int> lr_maxima;
  std::set<int> rl_maxima;
  std::set<int> lr_minima;
  int position_of_1 = 0;  // 1-based column index
  int position_of_n = 0;

  bool operator==(const ExtremaReport&) const = default;
};

/// Exponent triple of the weight monomial x^l y^r q^s where x, y stand
/// for the reciprocals of the two boundary rates.
struct WeightExponents {
  int l = 0;  // number of LR-minima
  int r = 0;  // number of RL-minima
  int s = 0;  // number of shadow boxes

  bool operator==(const WeightExponents&) const = default;
};

/// Sparse generating polynomial: coefficient count per (l, r, s) triple.
struct GenPolynomial {
  std::map<std::array<int, 3>, std::uint64_t> terms;

  std::uint64_t coefficient_sum() const;
  /// Lines "l r s coeff" in ascending lexicographic order of the triple.
  std::string to_lines() const;

  bool operator==(const GenPolynomial&) const = default;
};

BoxStatistics box_statistics(const WeightedDyckWord& w);

/// Left and right border of column i predicted from sigma alone: lb is D
/// iff j = n or j+1 sits right of j, rb is U iff j = 1 or j sits right of
/// j-1, where j is the entry at position i. Throws PositionOutOfRange.
std::pair<Step, Step> borders(const Permutation& sigma, int i);

/// Reads the four extrema families off the tableau: dots at height 0 / at
/// maximal height combined with their border steps and their position
/// relative to the columns of 1 and n. Throws EmptyWord.
ExtremaReport extrema(const WeightedDyckWord& w);

TltStats tlt_statistics(const HistoryTable& h);

/// Throws EmptyWord on the size-0 word.
WeightExponents weight_exponents(const WeightedDyckWord& w);

struct PolynomialOptions {
  int max_size = 9;  // enumeration guard
  int workers = 1;
  /// Optional restriction hook: only tableaux accepted by the predicate
  /// contribute. No subset is asserted to mean anything by the library.
  std::function<bool(const WeightedDyckWord&)> filter;
};

/// Sum of the weight monomial over all Dyck tableaux of size n (or the
/// filtered subset). Throws SizeTooLarge when n < 1 or n > max_size.
GenPolynomial partition_polynomial(int n, const PolynomialOptions& options = {});

}  // namespace dycktab
