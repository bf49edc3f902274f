#include "dycktab/enumerate.hpp"

#include <algorithm>

namespace dycktab {

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

std::uint64_t catalan(int n) {
  // C_0 = 1, C_{k+1} = C_k * 2(2k+1)/(k+2); exact in integers.
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k)
    c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
  return c;
}

namespace {

// Odometer step over H[1..n] with digit ranges 0 <= H[j] < j, the last
// digit fastest. Returns false when the odometer wraps around.
bool next_history(std::vector<int>& h) {
  for (int j = static_cast<int>(h.size()); j >= 1; --j) {
    auto& digit = h[static_cast<size_t>(j - 1)];
    if (digit + 1 < j) {
      ++digit;
      return true;
    }
    digit = 0;
  }
  return false;
}

}  // namespace

void for_each_history(int n, const std::function<void(const HistoryTable&)>& fn) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "negative size " + std::to_string(n));
  std::vector<int> h(static_cast<size_t>(n), 0);
  do {
    fn(HistoryTable(h));
  } while (next_history(h));
}

WordRange::iterator::iterator(int n)
    : n_(n), done_(false), history_(std::vector<int>(static_cast<size_t>(std::max(0, n)), 0)) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "negative size " + std::to_string(n));
}

const WeightedDyckWord& WordRange::iterator::operator*() const {
  if (!word_) word_ = from_history(history_);
  return *word_;
}

WordRange::iterator& WordRange::iterator::operator++() {
  word_.reset();
  std::vector<int> h = history_.entries();
  if (next_history(h)) {
    history_ = HistoryTable(std::move(h));
  } else {
    done_ = true;
  }
  return *this;
}

std::vector<WeightedDyckWord> all_words(int n) {
  std::vector<WeightedDyckWord> out;
  out.reserve(static_cast<size_t>(factorial(n)));
  for (const WeightedDyckWord& w : WordRange(n)) out.push_back(w);
  return out;
}

}  // namespace dycktab
