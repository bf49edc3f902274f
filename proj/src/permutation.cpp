#include "dycktab/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace dycktab {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = static_cast<int>(one_line_.size());
  inverse_.assign(one_line_.size(), 0);
  for (int pos = 1; pos <= n; ++pos) {
    const int value = one_line_[static_cast<size_t>(pos - 1)];
    if (value < 1 || value > n || inverse_[static_cast<size_t>(value - 1)] != 0)
      throw Error(Errc::InvalidPermutation,
                  "one-line notation is not a rearrangement of 1.." + std::to_string(n));
    inverse_[static_cast<size_t>(value - 1)] = pos;
  }
}

Permutation parse_permutation(const std::string& text) {
  std::vector<int> values;
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed.empty()) return Permutation{};
  std::istringstream in(trimmed);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(value);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidPermutation, "bad permutation entry '" + item + "'");
    }
  }
  if (trimmed.back() == ',')
    throw Error(Errc::InvalidPermutation, "trailing comma in permutation");
  return Permutation(std::move(values));
}

std::string serialize_permutation(const Permutation& sigma) {
  std::string out;
  for (int v : sigma.one_line()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

PatternMatches count_patterns(const Permutation& sigma, PatternKind kind) {
  const int n = sigma.size();
  PatternMatches result;
  result.kind = kind;
  // Each occurrence is pinned by the consecutive value pair (c+1, c) with
  // c+1 placed before c; keyed by positions for the reading order.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> keyed;
  for (int c = 1; c < n; ++c) {
    const int a = c + 1;
    const int pa = sigma.position_of(a);
    const int pc = sigma.position_of(c);
    if (pa >= pc) continue;
    if (kind == PatternKind::TwoPlusTwo) {
      keyed.push_back({{pa, pc}, {a, c}});
      continue;
    }
    for (int p = pa + 1; p < pc; ++p) {
      const int b = sigma.value_at(p);
      const bool match = kind == PatternKind::TwoPlusOneTwo ? b < c : b > a;
      if (match) keyed.push_back({{pa, p, pc}, {a, b, c}});
    }
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& [pos, values] : keyed) result.occurrences.push_back(std::move(values));
  return result;
}

HistoryTable non_inversion_table(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> entries(static_cast<size_t>(n), 0);
  for (int pos = 1; pos <= n; ++pos) {
    const int value = sigma.value_at(pos);
    int smaller_before = 0;
    for (int p = 1; p < pos; ++p)
      if (sigma.value_at(p) < value) ++smaller_before;
    entries[static_cast<size_t>(value - 1)] = smaller_before;
  }
  return HistoryTable(std::move(entries));
}

Permutation permutation_of(const WeightedDyckWord& w) {
  const HistoryTable history = history_of(w);
  const int n = history.size();
  // NI[j] counts the smaller values left of j, so processing values from
  // n down to 1 the position of j is the NI[j]-th still-free slot.
  std::vector<int> free_positions(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) free_positions[static_cast<size_t>(i)] = i + 1;
  std::vector<int> one_line(static_cast<size_t>(n), 0);
  for (int value = n; value >= 1; --value) {
    const auto it = free_positions.begin() + history.at(value);
    one_line[static_cast<size_t>(*it - 1)] = value;
    free_positions.erase(it);
  }
  return Permutation(std::move(one_line));
}

WeightedDyckWord tableau_of(const Permutation& sigma, DotInsertionTrace* trace) {
  const int n = sigma.size();
  struct Slot {
    Step lb = Step::Down;
    int weight = 0;
    Step rb = Step::Up;
  };
  std::vector<std::optional<Slot>> slots(static_cast<size_t>(n));
  if (trace) {
    trace->ribbons = 0;
    trace->borders_after_step.clear();
  }

  int previous_slot = -1;
  for (int j = 1; j <= n; ++j) {
    const int i = sigma.position_of(j) - 1;  // 0-based column slot
    int diff = 0;
    for (int t = 0; t < i; ++t) {
      if (!slots[static_cast<size_t>(t)]) continue;
      const Slot& s = *slots[static_cast<size_t>(t)];
      diff += (s.lb == Step::Down ? 1 : -1) + (s.rb == Step::Down ? 1 : -1);
    }
    // New dot at the bottom of its column; the occupied slots to the left
    // determine the height.
    slots[static_cast<size_t>(i)] = Slot{Step::Down, diff / 2, Step::Up};
    if (j >= 2 && i < previous_slot) {
      Slot& prev = *slots[static_cast<size_t>(previous_slot)];
      if (prev.lb != Step::Down) throw std::logic_error("previous dot lost its D left border");
      slots[static_cast<size_t>(i)]->rb = Step::Down;
      prev.lb = Step::Up;
      if (trace) ++trace->ribbons;
    }
    previous_slot = i;
    if (trace) {
      std::vector<std::optional<std::pair<Step, Step>>> borders(static_cast<size_t>(n));
      for (int t = 0; t < n; ++t)
        if (slots[static_cast<size_t>(t)])
          borders[static_cast<size_t>(t)] = {slots[static_cast<size_t>(t)]->lb,
                                             slots[static_cast<size_t>(t)]->rb};
      trace->borders_after_step.push_back(std::move(borders));
    }
  }

  std::vector<Letter> letters;
  letters.reserve(static_cast<size_t>(4 * n + 1));
  for (const auto& slot : slots) {
    letters.push_back(Letter::diamond());
    letters.push_back(Letter::step(slot->lb));
    letters.push_back(Letter::weight(slot->weight));
    letters.push_back(Letter::step(slot->rb));
  }
  letters.push_back(Letter::diamond());
  return WeightedDyckWord(std::move(letters));
}

namespace {

template <typename Better>
std::set<int> running_extrema(const Permutation& sigma, bool from_left, Better better) {
  std::set<int> out;
  const int n = sigma.size();
  std::optional<int> best;
  for (int step = 0; step < n; ++step) {
    const int pos = from_left ? step + 1 : n - step;
    const int value = sigma.value_at(pos);
    if (!best || better(value, *best)) {
      out.insert(value);
      best = value;
    }
  }
  return out;
}

}  // namespace

std::set<int> rl_minima_of(const Permutation& sigma) {
  return running_extrema(sigma, false, std::less<int>());
}

std::set<int> rl_maxima_of(const Permutation& sigma) {
  return running_extrema(sigma, false, std::greater<int>());
}

std::set<int> lr_minima_of(const Permutation& sigma) {
  return running_extrema(sigma, true, std::less<int>());
}

std::set<int> lr_maxima_of(const Permutation& sigma) {
  return running_extrema(sigma, true, std::greater<int>());
}

}  // namespace dycktab
