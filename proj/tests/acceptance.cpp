// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "dycktab/enumerate.hpp"
#include "dycktab/statistics.hpp"
#include "dycktab/verify.hpp"

using namespace dycktab;

namespace {

struct Outcome {
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> values(static_cast<size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  do {
    fn(Permutation(values));
  } while (std::next_permutation(values.begin(), values.end()));
}

Outcome counting() {
  Outcome outcome;
  const std::uint64_t expected[] = {1, 1, 2, 6, 24, 120, 720, 5040};
  for (int n = 0; n <= 7; ++n) {
    std::uint64_t count = 0;
    std::set<std::string> seen;
    for (const WeightedDyckWord& w : WordRange(n)) {
      ++count;
      if (!seen.insert(serialize_word(w)).second) outcome.expect(false, "duplicate word");
    }
    outcome.expect(count == expected[n],
                   "size " + std::to_string(n) + " gave " + std::to_string(count) + " words");
  }
  return outcome;
}

Outcome catalan_shapes() {
  Outcome outcome;
  const std::uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 7; ++n) {
    std::set<std::string> shapes;
    for (const WeightedDyckWord& w : WordRange(n)) shapes.insert(shape_string(w));
    outcome.expect(shapes.size() == expected[n],
                   "size " + std::to_string(n) + " gave " + std::to_string(shapes.size()) +
                       " shapes");
  }
  return outcome;
}

Outcome inverse_procedure() {
  Outcome outcome;
  for (int n = 0; n <= 6; ++n) {
    for (const WeightedDyckWord& w : WordRange(n)) {
      for (int k = 0; k <= n; ++k) {
        const WeightedDyckWord grown = insert(w, k);
        const bool special_ok = special_weight_index(grown) == 4 * k + 3;
        const InverseInsertResult back = inverse_insert(grown);
        outcome.expect(special_ok && back.word == w && back.at == k,
                       serialize_word(w) + " slot " + std::to_string(k));
      }
    }
  }
  return outcome;
}

Outcome bijection() {
  Outcome outcome;
  outcome.expect(
      serialize_history(non_inversion_table(parse_permutation("2,4,1,5,3"))) == "0,0,2,1,3",
      "NI(24153)");
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      const WeightedDyckWord direct = tableau_of(sigma);
      outcome.expect(direct == from_history(non_inversion_table(sigma)) &&
                         permutation_of(direct) == sigma,
                     "perm " + serialize_permutation(sigma));
    });
    for (const WeightedDyckWord& w : WordRange(n))
      outcome.expect(tableau_of(permutation_of(w)) == w, "word " + serialize_word(w));
  }
  return outcome;
}

Outcome patterns() {
  Outcome outcome;
  const Permutation spot = parse_permutation("2,7,4,6,1,5,3");
  const BoxStatistics spot_stats = box_statistics(tableau_of(spot));
  outcome.expect(spot_stats.ribbons == 4 && spot_stats.shadow == 3 && spot_stats.clear == 5,
                 "spot values for 2746153");
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      const BoxStatistics stats = box_statistics(tableau_of(sigma));
      const PatternMatches two_two = count_patterns(sigma, PatternKind::TwoPlusTwo);
      const PatternMatches shadow = count_patterns(sigma, PatternKind::TwoPlusOneTwo);
      const PatternMatches clear = count_patterns(sigma, PatternKind::OnePlusTwoOne);
      bool ok = stats.ribbons == two_two.count() && stats.shadow == shadow.count() &&
                stats.clear == clear.count();
      for (int i = 1; i <= n && ok; ++i) {
        const int b = sigma.value_at(i);
        int clear_mid = 0, shadow_mid = 0;
        for (const auto& occ : clear.occurrences)
          if (occ[1] == b) ++clear_mid;
        for (const auto& occ : shadow.occurrences)
          if (occ[1] == b) ++shadow_mid;
        ok = stats.per_column_clear[static_cast<size_t>(i - 1)] == clear_mid &&
             stats.per_column_shadow[static_cast<size_t>(i - 1)] == shadow_mid;
      }
      outcome.expect(ok, "perm " + serialize_permutation(sigma));
    });
  }
  return outcome;
}

Outcome border_formula() {
  Outcome outcome;
  outcome.expect(borders(parse_permutation("2,4,1,5,3"), 2) ==
                     std::pair{Step::Down, Step::Down},
                 "spot value (24153, 2)");
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      const TableauView view = tableau_view(tableau_of(sigma));
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i) {
        const auto [lb, rb] = borders(sigma, i);
        const ColumnView& col = view.columns[static_cast<size_t>(i - 1)];
        ok = lb == col.lb && rb == col.rb;
      }
      outcome.expect(ok, "perm " + serialize_permutation(sigma));
    });
  }
  return outcome;
}

Outcome extrema_families() {
  Outcome outcome;
  outcome.expect(extrema(tableau_of(parse_permutation("3,1,4,2,8,5,7,6"))).rl_minima ==
                     std::set<int>{1, 2, 5, 6},
                 "spot RL-minima of 31428576");
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      const ExtremaReport report = extrema(tableau_of(sigma));
      outcome.expect(report.rl_minima == rl_minima_of(sigma) &&
                         report.rl_maxima == rl_maxima_of(sigma) &&
                         report.lr_minima == lr_minima_of(sigma) &&
                         report.lr_maxima == lr_maxima_of(sigma) &&
                         sigma.value_at(report.position_of_1) == 1 &&
                         sigma.value_at(report.position_of_n) == n,
                     "perm " + serialize_permutation(sigma));
    });
  }
  return outcome;
}

Outcome tree_like_statistics() {
  Outcome outcome;
  for (int n = 0; n <= 6; ++n) {
    for_each_history(n, [&](const HistoryTable& h) {
      const TltStats tlt = tlt_statistics(h);
      const BoxStatistics stats = box_statistics(from_history(h));
      outcome.expect(tlt.crossing_boxes == stats.shadow &&
                         tlt.ribbons + tlt.left_sons == stats.ribbons,
                     "history " + serialize_history(h));
    });
  }
  return outcome;
}

Outcome pasep_polynomial() {
  Outcome outcome;
  for (int n = 1; n <= 6; ++n) {
    const GenPolynomial from_tableaux = partition_polynomial(n);
    GenPolynomial from_permutations;
    for_each_permutation(n, [&](const Permutation& sigma) {
      const int l = static_cast<int>(lr_minima_of(sigma).size());
      const int r = static_cast<int>(rl_minima_of(sigma).size());
      const int s = count_patterns(sigma, PatternKind::TwoPlusOneTwo).count();
      ++from_permutations.terms[{l, r, s}];
      ++outcome.cases;
    });
    outcome.expect(from_tableaux == from_permutations &&
                       from_tableaux.coefficient_sum() == factorial(n),
                   "size " + std::to_string(n));
  }
  return outcome;
}

Outcome full_verify() {
  Outcome outcome;
  for (const VerificationReport& report : verify_all(6)) {
    outcome.cases += report.cases;
    if (!report.passed()) {
      outcome.passed = false;
      if (outcome.detail.empty()) outcome.detail = report.id + ": " + report.failures.front();
    }
  }
  return outcome;
}

struct Criterion {
  int number;
  std::string name;
  std::function<Outcome()> run;
  double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "counting: n! words of size n for n = 0..7", counting, 10.0},
      {2, "Catalan shapes up to n = 7", catalan_shapes, 0.0},
      {3, "inverse insertion inverts insertion, words of size <= 6", inverse_procedure, 30.0},
      {4, "bijection phi round trips and construction equivalence, n <= 6", bijection, 0.0},
      {5, "patterns vs ribbons/shadow/clear with per-column refinement, n <= 6", patterns, 0.0},
      {6, "border formula matches tableau steps, n <= 6", border_formula, 0.0},
      {7, "extrema characterizations match brute force, n <= 6", extrema_families, 0.0},
      {8, "tree-like crossing boxes equal shadow boxes, n <= 6", tree_like_statistics, 0.0},
      {9, "weight polynomial equals the permutation polynomial, n <= 6", pasep_polynomial, 0.0},
      {10, "full verify suite at max_n = 6", full_verify, 60.0},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = criterion.run();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.budget_seconds > 0 && elapsed >= criterion.budget_seconds) {
      outcome.passed = false;
      outcome.detail = "over time budget of " + std::to_string(criterion.budget_seconds) + " s";
    }
    std::ostringstream line;
    line << (outcome.passed ? "PASS" : "FAIL") << " criterion-" << criterion.number << ": "
         << criterion.name << " (cases=" << outcome.cases << ", " << static_cast<int>(elapsed * 1000)
         << " ms)";
    if (!outcome.passed) line << "\n  first failure: " << outcome.detail;
    std::cout << line.str() << '\n';
    if (!outcome.passed) ++failures;
  }
  return failures;
}
