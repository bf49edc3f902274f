#include "dycktab/verify.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "dycktab/enumerate.hpp"

using namespace dycktab;

TEST_CASE("enumeration yields each word once, in history order") {
  const std::vector<WeightedDyckWord> none = all_words(0);
  REQUIRE(none.size() == 1);
  CHECK(none[0] == WeightedDyckWord::empty());

  CHECK(all_words(3).size() == 6);

  for (int n = 0; n <= 6; ++n) {
    std::uint64_t count = 0;
    std::set<std::string> seen;
    std::vector<int> previous;
    for (auto it = WordRange(n).begin(); it != std::default_sentinel; ++it) {
      ++count;
      CHECK(seen.insert(serialize_word(*it)).second);
      const std::vector<int>& h = it.history().entries();
      if (count > 1) CHECK(std::lexicographical_compare(previous.begin(), previous.end(),
                                                        h.begin(), h.end()));
      previous = h;
    }
    CHECK(count == factorial(n));
  }
}

TEST_CASE("counting helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(7) == 5040);
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(7) == 429);
}

TEST_CASE("enumeration rejects negative sizes") {
  CHECK_THROWS_AS(all_words(-1), Error);
  CHECK_THROWS_AS(for_each_history(-2, [](const HistoryTable&) {}), Error);
}

TEST_CASE("every registered proposition runs and passes at a small bound") {
  for (const std::string& id : proposition_ids()) {
    const VerificationReport report = verify(id, 3);
    CAPTURE(id);
    CHECK(report.passed());
    CHECK(report.cases > 0);
    CHECK(report.max_n == 3);
    CHECK(report.to_text().rfind("PASS", 0) == 0);
  }
}

TEST_CASE("default bounds are 6, or 7 for counting-only checks") {
  CHECK(default_max_n("COUNT") == 7);
  CHECK(default_max_n("CATALAN-SHAPES") == 7);
  CHECK(default_max_n("P2.6") == 7);
  CHECK(default_max_n("P2.5") == 6);
  CHECK(default_max_n("P8-POLY") == 6);
}

TEST_CASE("count report matches the factorial sum") {
  const VerificationReport report = verify("COUNT", 7);
  CHECK(report.passed());
  CHECK(report.cases == 5913);  // 1! + 2! + ... + 7!
}

TEST_CASE("catalan shapes at size 3") {
  const VerificationReport report = verify("CATALAN-SHAPES", 3);
  CHECK(report.passed());
  CHECK(report.notes == "distinct shapes per size: 1,1,2,5");
}

TEST_CASE("unknown propositions are rejected") {
  CHECK_THROWS_AS(verify("P9.9"), Error);
}

TEST_CASE("verify_all covers the registry and can run sharded") {
  const std::vector<VerificationReport> reports = verify_all(2, 4);
  REQUIRE(reports.size() == proposition_ids().size());
  for (size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].id == proposition_ids()[i]);
    CHECK(reports[i].passed());
  }
}
