#include "dycktab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "dycktab/enumerate.hpp"
#include "dycktab/statistics.hpp"

namespace dycktab {

namespace {

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> values(static_cast<size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  do {
    fn(Permutation(values));
  } while (std::next_permutation(values.begin(), values.end()));
}

void fail(VerificationReport& report, const std::string& counterexample) {
  report.failures.push_back(counterexample);
}

// --- per-proposition checks; each iterates exhaustively up to max_n ---

void check_column_addition(VerificationReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const WeightedDyckWord& w : WordRange(n)) {
      const TableauView before = tableau_view(w);
      for (int k = 0; k <= n; ++k) {
        ++report.cases;
        const WeightedDyckWord grown = column_addition(w, w.diamond_position(k));
        const TableauView after = tableau_view(grown);
        bool ok = grown.size() == n + 1;
        const ColumnView& fresh = after.columns[static_cast<size_t>(k)];
        ok = ok && fresh.dot_height == fresh.height - 1;
        for (int c = 0; c < n && ok; ++c)
          ok = before.columns[static_cast<size_t>(c)] ==
               after.columns[static_cast<size_t>(c < k ? c : c + 1)];
        if (!ok)
          fail(report, "word " + serialize_word(w) + " diamond " + std::to_string(k));
      }
    }
  }
}

void check_ribbon_addition(VerificationReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const WeightedDyckWord& w : WordRange(n)) {
      const TableauView before = tableau_view(w);
      for (int u = 1; u <= w.num_letters(); ++u) {
        if (!w.letter(u).is_step() || w.letter(u).step_value() != Step::Up) continue;
        for (int d = u + 1; d <= w.num_letters(); ++d) {
          if (!w.letter(d).is_step() || w.letter(d).step_value() != Step::Down) continue;
          ++report.cases;
          const WeightedDyckWord swapped = ribbon_addition(w, u, d);
          const TableauView after = tableau_view(swapped);
          bool ok = swapped.size() == n;
          for (int c = 1; c <= n && ok; ++c) {
            const ColumnView& x = before.columns[static_cast<size_t>(c - 1)];
            const ColumnView& y = after.columns[static_cast<size_t>(c - 1)];
            const int q = w.weight_position(c);
            ok = y.dot_height == x.dot_height &&
                 y.height == x.height + (u < q && q < d ? 1 : 0);
            // Letters change at the two swapped positions only.
            for (int p : {q - 1, q + 1})
              if (p != u && p != d) ok = ok && w.letter(p) == swapped.letter(p);
          }
          ok = ok && swapped.letter(u).step_value() == Step::Down &&
               swapped.letter(d).step_value() == Step::Up;
          if (!ok)
            fail(report, "word " + serialize_word(w) + " swap " + std::to_string(u) + "," +
                             std::to_string(d));
        }
      }
    }
  }
}

void check_special_weight(VerificationReport& report, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for (const WeightedDyckWord& w : WordRange(n)) {
      ++report.cases;
      std::vector<int> eligible;
      for (int c = 1; c <= n; ++c) {
        const int pos = w.weight_position(c);
        if (w.letter(pos).weight_value() == column_height(w, pos) - 1 &&
            w.letter(pos - 1).step_value() == Step::Down)
          eligible.push_back(pos);
      }
      if (eligible.empty() || special_weight_index(w) != eligible.back())
        fail(report, "word " + serialize_word(w));
    }
  }
}

void check_new_weight_special(VerificationReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const WeightedDyckWord& w : WordRange(n)) {
      for (int k = 0; k <= n; ++k) {
        ++report.cases;
        const WeightedDyckWord grown = insert(w, k);
        if (special_weight_index(grown) != 4 * k + 3)
          fail(report, "word " + serialize_word(w) + " slot " + std::to_string(k));
      }
    }
  }
}

void check_inverse(VerificationReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const WeightedDyckWord& w : WordRange(n)) {
      for (int k = 0; k <= n; ++k) {
        ++report.cases;
        const InverseInsertResult back = inverse_insert(insert(w, k));
        if (back.word != w || back.at != k)
          fail(report, "word " + serialize_word(w) + " slot " + std::to_string(k));
      }
      if (n >= 1) {
        ++report.cases;
        const InverseInsertResult down = inverse_insert(w);
        if (insert(down.word, down.at) != w)
          fail(report, "word " + serialize_word(w) + " (reinsertion)");
      }
    }
  }
}

void check_generation(VerificationReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    std::set<std::string> seen;
    for (const WeightedDyckWord& w : WordRange(n)) {
      ++report.cases;
      if (from_history(history_of(w)) != w)
        fail(report, "word " + serialize_word(w) + " (history round trip)");
      if (!seen.insert(serialize_word(w)).second)
        fail(report, "word " + serialize_word(w) + " (duplicate)");
    }
  }
}

void check_count(VerificationReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    std::uint64_t count = 0;
    std::set<std::string> seen;
    for (const WeightedDyckWord& w : WordRange(n)) {
      ++count;
      if (!seen.insert(serialize_word(w)).second)
        fail(report, "word " + serialize_word(w) + " (duplicate)");
    }
    if (n >= 1) report.cases += count;  // the size-0 level is trivial
    if (count != factorial(n))
      fail(report, "size " + std::to_string(n) + ": " + std::to_string(count) +
                       " words, expected " + std::to_string(factorial(n)));
  }
}

void check_catalan_shapes(VerificationReport& report, int max_n) {
  std::string per_level;
  for (int n = 0; n <= max_n; ++n) {
    std::set<std::string> shapes;
    for (const WeightedDyckWord& w : WordRange(n)) {
      if (n >= 1) ++report.cases;
      shapes.insert(shape_string(w));
    }
    if (!per_level.empty()) per_level += ',';
    per_level += std::to_string(shapes.size());
    if (shapes.size() != catalan(n))
      fail(report, "size " + std::to_string(n) + ": " + std::to_string(shapes.size()) +
                       " shapes, expected " + std::to_string(catalan(n)));
  }
  report.notes = "distinct shapes per size: " + per_level;
}

void check_bijection(VerificationReport& report, int max_n) {
  ++report.cases;
  if (serialize_history(non_inversion_table(parse_permutation("2,4,1,5,3"))) != "0,0,2,1,3")
    fail(report, "NI(24153) != 0,0,2,1,3");
  for (int n = 0; n <= max_n; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      ++report.cases;
      const HistoryTable ni = non_inversion_table(sigma);
      const WeightedDyckWord direct = tableau_of(sigma);
      if (direct != from_history(ni))
        fail(report, "perm " + serialize_permutation(sigma) + " (construction mismatch)");
      if (permutation_of(direct) != sigma)
        fail(report, "perm " + serialize_permutation(sigma) + " (phi round trip)");
    });
    for (const WeightedDyckWord& w : WordRange(n)) {
      ++report.cases;
      if (tableau_of(permutation_of(w)) != w)
        fail(report, "word " + serialize_word(w) + " (phi inverse round trip)");
    }
  }
}

void check_ribbons_are_22(VerificationReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      ++report.cases;
      DotInsertionTrace trace;
      const WeightedDyckWord w = tableau_of(sigma, &trace);
      const PatternMatches matches = count_patterns(sigma, PatternKind::TwoPlusTwo);
      const HistoryTable h = non_inversion_table(sigma);
      int descents = 0;
      std::set<std::vector<int>> from_history_pairs;
      for (int j = 1; j < n; ++j) {
        if (h.at(j) >= h.at(j + 1)) {
          ++descents;
          from_history_pairs.insert({j + 1, j});
        }
      }
      const std::set<std::vector<int>> reported(matches.occurrences.begin(),
                                                matches.occurrences.end());
      if (trace.ribbons != matches.count() || descents != matches.count() ||
          box_statistics(w).ribbons != matches.count() || reported != from_history_pairs)
        fail(report, "perm " + serialize_permutation(sigma));
    });
  }
}

void check_boxes_are_patterns(VerificationReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      ++report.cases;
      const BoxStatistics stats = box_statistics(tableau_of(sigma));
      if (stats.shadow != count_patterns(sigma, PatternKind::TwoPlusOneTwo).count() ||
          stats.clear != count_patterns(sigma, PatternKind::OnePlusTwoOne).count())
        fail(report, "perm " + serialize_permutation(sigma));
    });
  }
}

void check_per_column_patterns(VerificationReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      ++report.cases;
      const BoxStatistics stats = box_statistics(tableau_of(sigma));
      const PatternMatches clear = count_patterns(sigma, PatternKind::OnePlusTwoOne);
      const PatternMatches shadow = count_patterns(sigma, PatternKind::TwoPlusOneTwo);
      auto middle_count = [](const PatternMatches& m, int b) {
        int out = 0;
        for (const auto& occ : m.occurrences)
          if (occ[1] == b) ++out;
        return out;
      };
      for (int i = 1; i <= n; ++i) {
        const int b = sigma.value_at(i);
        if (stats.per_column_clear[static_cast<size_t>(i - 1)] != middle_count(clear, b) ||
            stats.per_column_shadow[static_cast<size_t>(i - 1)] != middle_count(shadow, b)) {
          fail(report, "perm " + serialize_permutation(sigma) + " column " + std::to_string(i));
          break;
        }
      }
    });
  }
}

void check_tlt(VerificationReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for_each_history(n, [&](const HistoryTable& h) {
      ++report.cases;
      const TltStats tlt = tlt_statistics(h);
      const BoxStatistics stats = box_statistics(from_history(h));
      if (tlt.crossing_boxes != stats.shadow || tlt.ribbons + tlt.left_sons != stats.ribbons)
        fail(report, "history " + serialize_history(h));
    });
  }
}

void check_border_stability(VerificationReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      ++report.cases;
      DotInsertionTrace trace;
      tableau_of(sigma, &trace);
      if (n == 0) return;
      const auto& final_borders = trace.borders_after_step.back();
      for (int i = 1; i <= n; ++i) {
        const int settled = std::min(n, sigma.value_at(i) + 1);
        for (int step = settled; step <= n; ++step) {
          if (trace.borders_after_step[static_cast<size_t>(step - 1)][static_cast<size_t>(i - 1)] !=
              final_borders[static_cast<size_t>(i - 1)]) {
            fail(report, "perm " + serialize_permutation(sigma) + " column " + std::to_string(i));
            return;
          }
        }
      }
    });
  }
}

void check_border_formula(VerificationReport& report, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      ++report.cases;
      const TableauView view = tableau_view(tableau_of(sigma));
      for (int i = 1; i <= n; ++i) {
        const auto [lb, rb] = borders(sigma, i);
        const ColumnView& col = view.columns[static_cast<size_t>(i - 1)];
        if (lb != col.lb || rb != col.rb) {
          fail(report, "perm " + serialize_permutation(sigma) + " position " + std::to_string(i));
          return;
        }
      }
    });
  }
}

void check_extrema_family(VerificationReport& report, int max_n,
                          const std::function<bool(const Permutation&, const ExtremaReport&)>& ok) {
  for (int n = 1; n <= max_n; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      ++report.cases;
      if (!ok(sigma, extrema(tableau_of(sigma))))
        fail(report, "perm " + serialize_permutation(sigma));
    });
  }
}

void check_polynomial(VerificationReport& report, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    PolynomialOptions options;
    options.max_size = std::max(options.max_size, max_n);
    const GenPolynomial from_tableaux = partition_polynomial(n, options);
    GenPolynomial from_permutations;
    for_each_permutation(n, [&](const Permutation& sigma) {
      const int l = static_cast<int>(lr_minima_of(sigma).size());
      const int r = static_cast<int>(rl_minima_of(sigma).size());
      const int s = count_patterns(sigma, PatternKind::TwoPlusOneTwo).count();
      ++from_permutations.terms[{l, r, s}];
    });
    report.cases += factorial(n);
    if (from_tableaux != from_permutations)
      fail(report, "size " + std::to_string(n) + " (term mismatch)");
    if (from_tableaux.coefficient_sum() != factorial(n))
      fail(report, "size " + std::to_string(n) + " (coefficient total)");
  }
}

struct Check {
  std::string id;
  std::string description;
  int default_max_n;
  std::function<void(VerificationReport&, int)> run;
};

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"P2.1", "column addition keeps words valid and other columns unchanged", 6,
       check_column_addition},
      {"P2.2", "ribbon addition raises exactly the in-between column heights", 6,
       check_ribbon_addition},
      {"P2.3", "every nonempty word has a unique special weight", 6, check_special_weight},
      {"P2.4", "the inserted weight becomes the special weight", 6, check_new_weight_special},
      {"P2.5", "inverse insertion inverts insertion on (word, slot) pairs", 6, check_inverse},
      {"P2.6", "every word is generated once from the empty word", 7, check_generation},
      {"COUNT", "there are n! words of size n", 7, check_count},
      {"CATALAN-SHAPES", "distinct shapes per size follow the Catalan numbers", 7,
       check_catalan_shapes},
      {"P3-EQUIV", "direct construction, history tables and phi round trips agree", 6,
       check_bijection},
      {"P4.1", "ribbons match the consecutive descending pairs", 6, check_ribbons_are_22},
      {"P4.2", "shadow and clear boxes match the two three-letter patterns", 6,
       check_boxes_are_patterns},
      {"COR4", "per-column box counts match patterns through their middle letter", 6,
       check_per_column_patterns},
      {"P5-TLT", "tree-like tableau statistics agree with box statistics", 6, check_tlt},
      {"P6.1", "borders are settled once the next value is placed", 6, check_border_stability},
      {"P6.2", "the border formula matches the actual tableau steps", 6, check_border_formula},
      {"P7.1", "dots at height 0 with rb = U are the RL-minima", 6,
       [](VerificationReport& report, int max_n) {
         check_extrema_family(report, max_n, [](const Permutation& s, const ExtremaReport& e) {
           return e.rl_minima == rl_minima_of(s);
         });
       }},
      {"P7.2", "dots at maximal height with lb = D are the LR-maxima", 6,
       [](VerificationReport& report, int max_n) {
         check_extrema_family(report, max_n, [](const Permutation& s, const ExtremaReport& e) {
           return e.lr_maxima == lr_maxima_of(s);
         });
       }},
      {"P7.3", "the columns of the entries 1 and n are identified", 6,
       [](VerificationReport& report, int max_n) {
         check_extrema_family(report, max_n, [](const Permutation& s, const ExtremaReport& e) {
           return s.value_at(e.position_of_1) == 1 && s.value_at(e.position_of_n) == s.size();
         });
       }},
      {"P7.4", "maximal-height dots with lb = U right of n are the other RL-maxima", 6,
       [](VerificationReport& report, int max_n) {
         check_extrema_family(report, max_n, [](const Permutation& s, const ExtremaReport& e) {
           return e.rl_maxima == rl_maxima_of(s);
         });
       }},
      {"P7.5", "height-0 dots with rb = D left of 1 are the other LR-minima", 6,
       [](VerificationReport& report, int max_n) {
         check_extrema_family(report, max_n, [](const Permutation& s, const ExtremaReport& e) {
           return e.lr_minima == lr_minima_of(s);
         });
       }},
      {"P8-POLY", "the tableau polynomial equals the permutation polynomial", 6,
       check_polynomial},
  };
  return checks;
}

const Check& find_check(const std::string& id) {
  for (const Check& check : registry())
    if (check.id == id) return check;
  throw Error(Errc::UnknownProposition, "unknown proposition id '" + id + "'");
}

}  // namespace

std::string VerificationReport::to_text() const {
  std::string line = passed() ? "PASS " : "FAIL ";
  line += id;
  line.append(id.size() < 15 ? 15 - id.size() : 1, ' ');
  line += "max_n=" + std::to_string(max_n) + " cases=" + std::to_string(cases);
  line += "  " + description;
  if (!notes.empty()) line += " [" + notes + "]";
  if (!passed()) {
    line += "\n  failures: " + std::to_string(failures.size());
    for (size_t i = 0; i < failures.size() && i < 5; ++i) line += "\n    " + failures[i];
    if (failures.size() > 5) line += "\n    ...";
  }
  return line;
}

const std::vector<std::string>& proposition_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const Check& check : registry()) out.push_back(check.id);
    return out;
  }();
  return ids;
}

int default_max_n(const std::string& id) { return find_check(id).default_max_n; }

VerificationReport verify(const std::string& id, int max_n) {
  const Check& check = find_check(id);
  VerificationReport report;
  report.id = check.id;
  report.description = check.description;
  report.max_n = max_n > 0 ? max_n : check.default_max_n;
  try {
    check.run(report, report.max_n);
  } catch (const std::exception& e) {
    report.failures.push_back(std::string("exception: ") + e.what());
  }
  return report;
}

std::vector<VerificationReport> verify_all(int max_n, int workers) {
  const auto& checks = registry();
  std::vector<VerificationReport> reports(checks.size());
  if (workers <= 1) {
    for (size_t i = 0; i < checks.size(); ++i)
      reports[i] = verify(checks[i].id, max_n);
    return reports;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> threads;
  const size_t pool = std::min(static_cast<size_t>(workers), checks.size());
  threads.reserve(pool);
  for (size_t t = 0; t < pool; ++t) {
    threads.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < checks.size(); i = next.fetch_add(1))
        reports[i] = verify(checks[i].id, max_n);
    });
  }
  for (std::thread& t : threads) t.join();
  return reports;
}

}  // namespace dycktab
