#include "dycktab/statistics.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "dycktab/enumerate.hpp"

namespace dycktab {

std::uint64_t GenPolynomial::coefficient_sum() const {
  std::uint64_t sum = 0;
  for (const auto& [triple, coeff] : terms) sum += coeff;
  return sum;
}

std::string GenPolynomial::to_lines() const {
  std::string out;
  for (const auto& [triple, coeff] : terms) {
    out += std::to_string(triple[0]) + ' ' + std::to_string(triple[1]) + ' ' +
           std::to_string(triple[2]) + ' ' + std::to_string(coeff) + '\n';
  }
  return out;
}

BoxStatistics box_statistics(const WeightedDyckWord& w) {
  BoxStatistics stats;
  for (const ColumnView& col : tableau_view(w).columns) {
    const int shadow = col.height - 1 - col.dot_height;
    stats.per_column_shadow.push_back(shadow);
    stats.per_column_clear.push_back(col.dot_height);
    stats.shadow += shadow;
    stats.clear += col.dot_height;
  }
  const HistoryTable history = history_of(w);
  for (int j = 1; j < history.size(); ++j)
    if (history.at(j) >= history.at(j + 1)) ++stats.ribbons;
  return stats;
}

std::pair<Step, Step> borders(const Permutation& sigma, int i) {
  const int n = sigma.size();
  if (i < 1 || i > n)
    throw Error(Errc::PositionOutOfRange, "border position out of range: " + std::to_string(i));
  const int j = sigma.value_at(i);
  const Step lb = (j == n || sigma.position_of(j + 1) > i) ? Step::Down : Step::Up;
  const Step rb = (j == 1 || i > sigma.position_of(j - 1)) ? Step::Up : Step::Down;
  return {lb, rb};
}

ExtremaReport extrema(const WeightedDyckWord& w) {
  const int n = w.size();
  if (n == 0) throw Error(Errc::EmptyWord, "extrema need at least one column");
  const TableauView view = tableau_view(w);
  const Permutation sigma = permutation_of(w);  // value lookup for reporting

  ExtremaReport report;
  auto at_top = [&](int c) { return view.columns[static_cast<size_t>(c - 1)].dot_height == 0; };
  auto at_bottom = [&](int c) {
    const ColumnView& col = view.columns[static_cast<size_t>(c - 1)];
    return col.dot_height == col.height - 1;
  };
  auto lb = [&](int c) { return view.columns[static_cast<size_t>(c - 1)].lb; };
  auto rb = [&](int c) { return view.columns[static_cast<size_t>(c - 1)].rb; };

  for (int c = 1; c <= n; ++c) {
    if (at_top(c) && rb(c) == Step::Up) {
      report.rl_minima.insert(sigma.value_at(c));
      if (report.position_of_1 == 0) report.position_of_1 = c;  // leftmost
    }
    if (at_bottom(c) && lb(c) == Step::Down) {
      report.lr_maxima.insert(sigma.value_at(c));
      report.position_of_n = c;  // rightmost wins
    }
  }
  // RL-maxima other than n: dots at maximal height with lb = U, right of
  // the column of n; LR-minima other than 1 mirror this on the left.
  report.rl_maxima.insert(sigma.value_at(report.position_of_n));
  for (int c = report.position_of_n + 1; c <= n; ++c)
    if (at_bottom(c) && lb(c) == Step::Up) report.rl_maxima.insert(sigma.value_at(c));
  report.lr_minima.insert(sigma.value_at(report.position_of_1));
  for (int c = 1; c < report.position_of_1; ++c)
    if (at_top(c) && rb(c) == Step::Down) report.lr_minima.insert(sigma.value_at(c));
  return report;
}

TltStats tlt_statistics(const HistoryTable& h) {
  TltStats stats;
  for (int j = 1; j < h.size(); ++j) {
    const int delta = h.at(j) - h.at(j + 1);
    if (delta > 0) ++stats.ribbons;
    if (delta == 0) ++stats.left_sons;
    stats.crossing_boxes += std::max(0, delta);
  }
  return stats;
}

WeightExponents weight_exponents(const WeightedDyckWord& w) {
  if (w.size() == 0) throw Error(Errc::EmptyWord, "weight exponents need at least one column");
  const ExtremaReport report = extrema(w);
  return {static_cast<int>(report.lr_minima.size()), static_cast<int>(report.rl_minima.size()),
          box_statistics(w).shadow};
}

namespace {

void accumulate_term(GenPolynomial& poly, const WeightedDyckWord& w) {
  const WeightExponents e = weight_exponents(w);
  if (e.l < 1 || e.r < 1) throw std::logic_error("tableau without extrema");
  ++poly.terms[{e.l, e.r, e.s}];
}

}  // namespace

GenPolynomial partition_polynomial(int n, const PolynomialOptions& options) {
  if (n < 1 || n > options.max_size)
    throw Error(Errc::SizeTooLarge, "size " + std::to_string(n) +
                                        " outside enumerable range 1.." +
                                        std::to_string(options.max_size));
  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    GenPolynomial poly;
    for (const WeightedDyckWord& w : WordRange(n))
      if (!options.filter || options.filter(w)) accumulate_term(poly, w);
    return poly;
  }

  // Shard by word ordinal; advancing the range without materializing a
  // word is cheap, and monomial maps merge associatively.
  std::vector<GenPolynomial> partial(static_cast<size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers));
  for (int r = 0; r < workers; ++r) {
    threads.emplace_back([&, r] {
      std::uint64_t ordinal = 0;
      GenPolynomial& poly = partial[static_cast<size_t>(r)];
      for (auto it = WordRange(n).begin(); it != std::default_sentinel; ++it, ++ordinal) {
        if (ordinal % static_cast<std::uint64_t>(workers) != static_cast<std::uint64_t>(r))
          continue;
        const WeightedDyckWord& w = *it;
        if (!options.filter || options.filter(w)) accumulate_term(poly, w);
      }
    });
  }
  for (std::thread& t : threads) t.join();
  GenPolynomial poly;
  for (const GenPolynomial& part : partial)
    for (const auto& [triple, coeff] : part.terms) poly.terms[triple] += coeff;
  return poly;
}

}  // namespace dycktab
