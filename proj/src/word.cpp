#include "dycktab/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dycktab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::LexError: return "LexError";
    case Errc::GrammarError: return "GrammarError";
    case Errc::NotDyck: return "NotDyck";
    case Errc::WeightTooLarge: return "WeightTooLarge";
    case Errc::PositionNotWeight: return "PositionNotWeight";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::NotADiamond: return "NotADiamond";
    case Errc::BadPositions: return "BadPositions";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidHistory: return "InvalidHistory";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::SizeTooLarge: return "SizeTooLarge";
    case Errc::UnknownProposition: return "UnknownProposition";
  }
  return "Error";
}

Step Letter::step_value() const {
  if (!is_step()) throw std::logic_error("letter is not a step");
  return kind_ == Kind::Up ? Step::Up : Step::Down;
}

int Letter::weight_value() const {
  if (!is_weight()) throw std::logic_error("letter is not a weight");
  return value_;
}

std::string Letter::token() const {
  switch (kind_) {
    case Kind::Diamond: return "*";
    case Kind::Up: return "U";
    case Kind::Down: return "D";
    case Kind::Weight: return std::to_string(value_);
  }
  return {};
}

namespace {

// Expected letter kind in the (diamond step weight step)* diamond shape,
// by 0-based position mod 4.
bool matches_slot(const Letter& l, size_t pos0) {
  switch (pos0 % 4) {
    case 0: return l.is_diamond();
    case 2: return l.is_weight();
    default: return l.is_step();
  }
}

int raw_column_height(const std::vector<Letter>& letters, int pos) {
  int diff = 0;
  for (int p = 0; p + 1 < pos; ++p) {
    if (letters[static_cast<size_t>(p)].is_step())
      diff += letters[static_cast<size_t>(p)].step_value() == Step::Down ? 1 : -1;
  }
  return (diff + 1) / 2;  // ceil(diff / 2), diff >= 1 at weight positions
}

}  // namespace

WeightedDyckWord::WeightedDyckWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (size_t p = 0; p < letters_.size(); ++p) {
    if (!matches_slot(letters_[p], p))
      throw Error(Errc::GrammarError, "letter does not fit the word shape",
                  static_cast<int>(p) + 1);
  }
  if (letters_.size() % 4 != 1)
    throw Error(Errc::GrammarError, "unexpected end of word",
                static_cast<int>(letters_.size()) + 1);
  size_ = static_cast<int>(letters_.size() / 4);

  // Dyck condition on the step subword: report the first position after
  // which no completion to a balanced word exists.
  const int total_steps = 2 * size_;
  int down = 0, up = 0, seen = 0;
  for (size_t p = 0; p < letters_.size(); ++p) {
    if (!letters_[p].is_step()) continue;
    ++seen;
    if (letters_[p].step_value() == Step::Down) ++down; else ++up;
    if (up > down || down - up > total_steps - seen)
      throw Error(Errc::NotDyck, "step subword is not a Dyck word", static_cast<int>(p) + 1);
  }

  for (size_t p = 0; p < letters_.size(); ++p) {
    if (!letters_[p].is_weight()) continue;
    const int pos = static_cast<int>(p) + 1;
    const int ch = raw_column_height(letters_, pos);
    if (letters_[p].weight_value() >= ch)
      throw Error(Errc::WeightTooLarge,
                  "weight " + std::to_string(letters_[p].weight_value()) +
                      " is not below its column height " + std::to_string(ch),
                  pos);
  }
}

WeightedDyckWord WeightedDyckWord::empty() {
  return WeightedDyckWord({Letter::diamond()});
}

int WeightedDyckWord::diamond_position(int k) const {
  if (k < 0 || k > size_)
    throw Error(Errc::IndexOutOfRange, "diamond index out of range: " + std::to_string(k));
  return 4 * k + 1;
}

int WeightedDyckWord::weight_position(int column) const {
  if (column < 1 || column > size_)
    throw Error(Errc::PositionOutOfRange, "column out of range: " + std::to_string(column));
  return 4 * column - 1;
}

int WeightedDyckWord::column_of_weight(int pos) const {
  if (pos < 1 || pos > num_letters() || !letter(pos).is_weight())
    throw Error(Errc::PositionNotWeight, "no weight at position " + std::to_string(pos));
  return (pos + 1) / 4;
}

WeightedDyckWord parse_word(const std::string& text) {
  std::vector<Letter> letters;
  std::istringstream in(text);
  std::string tok;
  int index = 0;
  while (in >> tok) {
    ++index;
    if (tok == "*") {
      letters.push_back(Letter::diamond());
    } else if (tok == "U") {
      letters.push_back(Letter::up());
    } else if (tok == "D") {
      letters.push_back(Letter::down());
    } else if (std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
      try {
        letters.push_back(Letter::weight(std::stoi(tok)));
      } catch (const std::out_of_range&) {
        throw Error(Errc::LexError, "weight literal out of range: " + tok, index);
      }
    } else {
      throw Error(Errc::LexError, "unknown token '" + tok + "'", index);
    }
  }
  return WeightedDyckWord(std::move(letters));
}

std::string serialize_word(const WeightedDyckWord& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.token();
  }
  return out;
}

int column_height(const WeightedDyckWord& w, int pos) {
  if (pos < 1 || pos > w.num_letters() || !w.letter(pos).is_weight())
    throw Error(Errc::PositionNotWeight,
                "column height is defined only at weight positions", pos);
  return raw_column_height(w.letters(), pos);
}

TableauView tableau_view(const WeightedDyckWord& w) {
  TableauView view;
  view.columns.reserve(static_cast<size_t>(w.size()));
  for (int c = 1; c <= w.size(); ++c) {
    const int pos = w.weight_position(c);
    view.columns.push_back({w.letter(pos - 1).step_value(), w.letter(pos + 1).step_value(),
                            column_height(w, pos), w.letter(pos).weight_value()});
  }
  return view;
}

WeightedDyckWord from_view(const TableauView& view) {
  std::vector<Letter> letters;
  letters.reserve(view.columns.size() * 4 + 1);
  for (const ColumnView& col : view.columns) {
    letters.push_back(Letter::diamond());
    letters.push_back(Letter::step(col.lb));
    letters.push_back(Letter::weight(col.dot_height));
    letters.push_back(Letter::step(col.rb));
  }
  letters.push_back(Letter::diamond());
  return WeightedDyckWord(std::move(letters));
}

std::string shape_string(const WeightedDyckWord& w) {
  std::string out;
  for (const Letter& l : w.letters())
    if (l.is_step()) out += to_char(l.step_value());
  return out;
}

std::string render_ascii(const WeightedDyckWord& w) {
  const TableauView view = tableau_view(w);
  const int n = w.size();
  int max_height = 0;
  for (const ColumnView& c : view.columns) max_height = std::max(max_height, c.height);

  auto join = [](const std::vector<std::string>& cells) {
    std::string line;
    for (const std::string& cell : cells) {
      if (!line.empty()) line += ' ';
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line;
  };

  std::string out;
  for (int row = 0; row < max_height; ++row) {
    std::vector<std::string> cells;
    for (const ColumnView& c : view.columns) {
      if (row >= c.height) cells.emplace_back(" ");
      else cells.emplace_back(row == c.dot_height ? "o" : ".");
    }
    out += join(cells);
    out += '\n';
  }
  if (n > 0) {
    std::vector<std::string> cells;
    for (const ColumnView& c : view.columns)
      cells.push_back(std::string{to_char(c.lb), to_char(c.rb)});
    out += join(cells);
    out += '\n';
  }
  out += join(std::vector<std::string>(static_cast<size_t>(n) + 1, "*"));
  out += '\n';
  return out;
}

}  // namespace dycktab
