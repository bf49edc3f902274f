#pragma once

#include <string>
#include <vector>

#include "dycktab/error.hpp"

namespace dycktab {

/// A border step of the path under a tableau. The path is read left to
/// right, 'D' for a step going down and 'U' for a step going up.
enum class Step : char { Down = 'D', Up = 'U' };

inline char to_char(Step s) { return static_cast<char>(s); }

/// One letter of a weighted Dyck word: a basement diamond, a border step,
/// or a nonnegative integer weight (the height of a dot in its column).
class Letter {
 public:
  enum class Kind : unsigned char { Diamond, Up, Down, Weight };

  static Letter diamond() { return Letter(Kind::Diamond, 0); }
  static Letter up() { return Letter(Kind::Up, 0); }
  static Letter down() { return Letter(Kind::Down, 0); }
  static Letter step(Step s) { return s == Step::Up ? up() : down(); }
  static Letter weight(int value) {
    if (value < 0) throw std::invalid_argument("weight letters are nonnegative");
    return Letter(Kind::Weight, value);
  }

  Kind kind() const { return kind_; }
  bool is_diamond() const { return kind_ == Kind::Diamond; }
  bool is_step() const { return kind_ == Kind::Up || kind_ == Kind::Down; }
  bool is_weight() const { return kind_ == Kind::Weight; }

  Step step_value() const;   // requires is_step()
  int weight_value() const;  // requires is_weight()

  std::string token() const;  // "*", "U", "D", or the decimal weight

  bool operator==(const Letter&) const = default;

 private:
  Letter(Kind kind, int value) : kind_(kind), value_(value) {}
  Kind kind_;
  int value_;
};

/// A weighted Dyck word: the canonical encoding of a Dyck tableau.
///
/// The letter sequence matches (diamond step weight step)* diamond, the
/// subword of steps is a Dyck word (every prefix has #D >= #U, totals
/// equal) and each weight is strictly below its column height. Values are
/// immutable after construction; all positions in the API are 1-based
/// letter indices over the whole word, diamonds and weights included.
class WeightedDyckWord {
 public:
  /// Validates all three grammar conditions; throws Error with kinds
  /// GrammarError / NotDyck / WeightTooLarge and the first offending
  /// 1-based letter index.
  explicit WeightedDyckWord(std::vector<Letter> letters);

  /// The word of size 0: a single diamond.
  static WeightedDyckWord empty();

  /// Number of weight letters (= number of columns = number of dots).
  int size() const { return size_; }
  int num_letters() const { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }

  /// 1-based letter access.
  const Letter& letter(int pos) const { return letters_.at(static_cast<size_t>(pos - 1)); }

  /// Position of the k-th diamond, k = 0..size (diamonds are the
  /// insertion slots, labeled left to right from 0).
  int diamond_position(int k) const;
  /// Position of the weight of column c, c = 1..size.
  int weight_position(int column) const;
  /// Column whose weight sits at letter position pos.
  int column_of_weight(int pos) const;

  bool operator==(const WeightedDyckWord&) const = default;

 private:
  std::vector<Letter> letters_;
  int size_ = 0;
};

/// Per-column view of a word as a tableau.
struct ColumnView {
  Step lb = Step::Down;  // step at the bottom-left of the column
  Step rb = Step::Up;    // step at the bottom-right
  int height = 1;        // number of boxes in the column
  int dot_height = 0;    // empty boxes above the dot (= the weight)

  bool operator==(const ColumnView&) const = default;
};

struct TableauView {
  std::vector<ColumnView> columns;

  bool operator==(const TableauView&) const = default;
};

/// Parses the whitespace-separated token format ("*", "U", "D", decimal
/// weights). Throws Error with kind LexError / GrammarError / NotDyck /
/// WeightTooLarge and the 1-based index of the first offending token.
WeightedDyckWord parse_word(const std::string& text);

/// Canonical token string: single space separators, no trailing space,
/// weights in decimal without leading zeros. parse_word round-trips it.
std::string serialize_word(const WeightedDyckWord& w);

/// Column height ch at a weight position: the ceiling of half the excess
/// of D over U letters before the position. Throws PositionNotWeight when
/// the letter at `pos` is not a weight.
int column_height(const WeightedDyckWord& w, int pos);

/// Per-column (lb, rb, height, dot height) records.
TableauView tableau_view(const WeightedDyckWord& w);

/// Rebuilds the word from its view; inverse of tableau_view.
WeightedDyckWord from_view(const TableauView& view);

/// The step subword as a string, e.g. "DDUU". Two characters per column.
std::string shape_string(const WeightedDyckWord& w);

/// Flat ASCII rendering: one grid row per box level (top-aligned, '.' for
/// an empty box, 'o' for the dot), a step line with the "lb rb" pair of
/// each column, and a basement line of '*' marks.
std::string render_ascii(const WeightedDyckWord& w);

}  // namespace dycktab
