#include "dycktab/insertion.hpp"

#include <sstream>

namespace dycktab {

HistoryTable::HistoryTable(std::vector<int> entries) : entries_(std::move(entries)) {
  for (size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] < 0 || entries_[j] > static_cast<int>(j))
      throw Error(Errc::InvalidHistory,
                  "entry " + std::to_string(entries_[j]) + " at step " + std::to_string(j + 1) +
                      " violates 0 <= H[j] < j");
  }
}

HistoryTable parse_history(const std::string& text) {
  std::vector<int> entries;
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed.empty()) return HistoryTable{};
  std::istringstream in(trimmed);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      entries.push_back(value);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidHistory, "bad history entry '" + item + "'");
    }
  }
  if (trimmed.back() == ',')
    throw Error(Errc::InvalidHistory, "trailing comma in history table");
  return HistoryTable(std::move(entries));
}

std::string serialize_history(const HistoryTable& h) {
  std::string out;
  for (int e : h.entries()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

namespace {

bool is_maximal_weight(const WeightedDyckWord& w, int pos) {
  return w.letter(pos).weight_value() == column_height(w, pos) - 1;
}

bool is_eligible(const WeightedDyckWord& w, int pos) {
  return is_maximal_weight(w, pos) &&
         w.letter(pos - 1).step_value() == Step::Down;
}

}  // namespace

int special_weight_index(const WeightedDyckWord& w) {
  if (w.size() == 0)
    throw Error(Errc::EmptyWord, "the empty word has no special weight");
  for (int c = w.size(); c >= 1; --c) {
    const int pos = w.weight_position(c);
    if (is_eligible(w, pos)) return pos;
  }
  // The first weight is always eligible, so this is unreachable on a
  // valid word.
  throw std::logic_error("no eligible weight found");
}

WeightedDyckWord column_addition(const WeightedDyckWord& w, int diamond_pos) {
  if (diamond_pos < 1 || diamond_pos > w.num_letters() ||
      !w.letter(diamond_pos).is_diamond())
    throw Error(Errc::NotADiamond, "no diamond at position " + std::to_string(diamond_pos));

  std::vector<Letter> letters(w.letters());
  const auto it = letters.begin() + diamond_pos - 1;
  // The weight is fixed up after insertion: it equals ch - 1 at its own
  // position in the result, i.e. the new dot sits at the bottom of the
  // new column.
  letters.insert(it + 1, {Letter::down(), Letter::weight(0), Letter::up(), Letter::diamond()});
  int diff = 0;
  for (int p = 0; p + 1 < diamond_pos + 2; ++p)
    if (letters[static_cast<size_t>(p)].is_step())
      diff += letters[static_cast<size_t>(p)].step_value() == Step::Down ? 1 : -1;
  letters[static_cast<size_t>(diamond_pos + 1)] = Letter::weight((diff + 1) / 2 - 1);
  return WeightedDyckWord(std::move(letters));
}

WeightedDyckWord ribbon_addition(const WeightedDyckWord& w, int u_pos, int d_pos) {
  const bool ok = u_pos >= 1 && d_pos <= w.num_letters() && u_pos < d_pos &&
                  w.letter(u_pos).is_step() && w.letter(d_pos).is_step() &&
                  w.letter(u_pos).step_value() == Step::Up &&
                  w.letter(d_pos).step_value() == Step::Down;
  if (!ok)
    throw Error(Errc::BadPositions, "ribbon addition needs a U at " + std::to_string(u_pos) +
                                        " before a D at " + std::to_string(d_pos));
  std::vector<Letter> letters(w.letters());
  letters[static_cast<size_t>(u_pos - 1)] = Letter::down();
  letters[static_cast<size_t>(d_pos - 1)] = Letter::up();
  return WeightedDyckWord(std::move(letters));
}

WeightedDyckWord insert(const WeightedDyckWord& w, int k) {
  if (k < 0 || k > w.size())
    throw Error(Errc::IndexOutOfRange,
                "insertion slot " + std::to_string(k) + " out of range 0.." +
                    std::to_string(w.size()));
  if (w.size() == 0) return column_addition(w, 1);

  const int special = special_weight_index(w);
  const int diamond = w.diamond_position(k);
  WeightedDyckWord result = column_addition(w, diamond);
  if (diamond < special) {
    // The U after the new weight; the D before the special weight, whose
    // position shifted by the four inserted letters.
    result = ribbon_addition(result, diamond + 3, special + 3);
  }
  return result;
}

InverseInsertResult inverse_insert(const WeightedDyckWord& w) {
  if (w.size() == 0)
    throw Error(Errc::EmptyWord, "cannot invert an insertion on the empty word");

  const int special = special_weight_index(w);
  std::vector<Letter> letters(w.letters());
  if (w.letter(special + 1).step_value() == Step::Down) {
    // Delete the ribbon: the leftmost maximal weight right of the special
    // weight is preceded by a U.
    int m_pos = 0;
    for (int c = w.column_of_weight(special) + 1; c <= w.size(); ++c) {
      const int pos = w.weight_position(c);
      if (is_maximal_weight(w, pos)) {
        m_pos = pos;
        break;
      }
    }
    if (m_pos == 0 || w.letter(m_pos - 1).step_value() != Step::Up)
      throw std::logic_error("inverse insertion: no maximal weight preceded by U");
    letters[static_cast<size_t>(special)] = Letter::up();
    letters[static_cast<size_t>(m_pos - 2)] = Letter::down();
  }
  // Replace the factor (diamond D s U diamond) around the special weight
  // by a single diamond.
  const int k = (special - 3) / 4;
  letters.erase(letters.begin() + special - 2, letters.begin() + special + 2);
  return {WeightedDyckWord(std::move(letters)), k};
}

HistoryTable history_of(const WeightedDyckWord& w) {
  std::vector<int> entries(static_cast<size_t>(w.size()), 0);
  WeightedDyckWord current = w;
  for (int j = w.size(); j >= 1; --j) {
    InverseInsertResult step = inverse_insert(current);
    entries[static_cast<size_t>(j - 1)] = step.at;
    current = std::move(step.word);
  }
  return HistoryTable(std::move(entries));
}

WeightedDyckWord from_history(const HistoryTable& h) {
  WeightedDyckWord w = WeightedDyckWord::empty();
  for (int j = 1; j <= h.size(); ++j) w = insert(w, h.at(j));
  return w;
}

}  // namespace dycktab
