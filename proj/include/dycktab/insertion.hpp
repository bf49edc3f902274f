#pragma once

#include <string>
#include <vector>

#include "dycktab/word.hpp"

namespace dycktab {

/// Basement labels chosen during successive insertions, H[1..n] with
/// 0 <= H[j] < j. The non-inversion table of a permutation has the same
/// shape.
class HistoryTable {
 public:
  HistoryTable() = default;
  /// Validates the bound 0 <= H[j] < j; throws InvalidHistory otherwise.
  explicit HistoryTable(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  /// 1-based access: H[j].
  int at(int j) const { return entries_.at(static_cast<size_t>(j - 1)); }

  bool operator==(const HistoryTable&) const = default;

 private:
  std::vector<int> entries_;
};

/// Comma-separated integers, e.g. "0,0,2,1,3". The empty table is "".
HistoryTable parse_history(const std::string& text);
std::string serialize_history(const HistoryTable& h);

/// Position of the unique special weight: the rightmost weight that is
/// maximal (value = column height - 1) and has a D letter just to its
/// left. Throws EmptyWord on the size-0 word.
int special_weight_index(const WeightedDyckWord& w);

/// Substitutes the diamond at `diamond_pos` by (diamond D m U diamond),
/// where m makes the new dot sit at the bottom of its column. Throws
/// NotADiamond when the position does not hold a diamond.
WeightedDyckWord column_addition(const WeightedDyckWord& w, int diamond_pos);

/// Exchanges the U letter at `u_pos` with the D letter at `d_pos`
/// (u_pos < d_pos), raising by one the height of every column whose
/// weight lies strictly between them. Throws BadPositions on wrong
/// letters or wrong order.
WeightedDyckWord ribbon_addition(const WeightedDyckWord& w, int u_pos, int d_pos);

/// Insertion procedure: adds a column at the k-th diamond (0-based
/// diamond index, 0 <= k <= size) and, when that diamond lies left of the
/// special weight, adds a ribbon between the new column and the special
/// weight's column. Throws IndexOutOfRange.
WeightedDyckWord insert(const WeightedDyckWord& w, int k);

struct InverseInsertResult {
  WeightedDyckWord word;
  int at = 0;  // 0-based diamond index where the removed column stood

  bool operator==(const InverseInsertResult&) const = default;
};

/// Inverse insertion procedure: removes the special weight's column,
/// deleting its ribbon first when one is present. Inverse of insert on
/// (word, k) pairs. Throws EmptyWord.
InverseInsertResult inverse_insert(const WeightedDyckWord& w);

/// History table produced by repeated inverse insertion.
HistoryTable history_of(const WeightedDyckWord& w);

/// Folds insert over H starting from the empty word; inverse of
/// history_of.
WeightedDyckWord from_history(const HistoryTable& h);

}  // namespace dycktab
