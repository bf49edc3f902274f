#include "dycktab/insertion.hpp"

#include <optional>

#include "doctest.h"
#include "dycktab/enumerate.hpp"

using namespace dycktab;

namespace {

const char* kWord24153 = "* D 0 D * D 1 D * U 0 U * D 1 U * U 0 U *";

template <typename Fn>
std::optional<Error> try_error(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("special weight is the rightmost maximal weight preceded by D") {
  CHECK(special_weight_index(parse_word("* D 0 U *")) == 3);
  CHECK(special_weight_index(parse_word("* D 0 U * D 0 U *")) == 7);
  // The second weight is preceded by U, so the first stays special.
  CHECK(special_weight_index(parse_word("* D 0 D * U 0 U *")) == 3);

  auto empty = try_error([] { special_weight_index(WeightedDyckWord::empty()); });
  REQUIRE(empty);
  CHECK(empty->code() == Errc::EmptyWord);
}

TEST_CASE("column addition splits a diamond into a dotted column") {
  const WeightedDyckWord w = parse_word("* D 0 D * D 1 D * U 0 U * U 0 D * U 0 U *");
  CHECK(serialize_word(column_addition(w, w.diamond_position(2))) ==
        "* D 0 D * D 1 D * D 2 U * U 0 U * U 0 D * U 0 U *");

  CHECK(serialize_word(column_addition(WeightedDyckWord::empty(), 1)) == "* D 0 U *");
  const WeightedDyckWord one = parse_word("* D 0 U *");
  CHECK(serialize_word(column_addition(one, 5)) == "* D 0 U * D 0 U *");

  auto bad = try_error([&] { column_addition(one, 2); });
  REQUIRE(bad);
  CHECK(bad->code() == Errc::NotADiamond);
}

TEST_CASE("ribbon addition swaps a U with a later D") {
  const WeightedDyckWord w =
      parse_word("* D 0 D * D 1 U * U 0 D * U 0 U * D 0 D * U 0 U * D 0 U *");
  CHECK(serialize_word(ribbon_addition(w, 8, 26)) ==
        "* D 0 D * D 1 D * U 0 D * U 0 U * D 0 D * U 0 U * U 0 U *");
}

TEST_CASE("ribbon addition with no column in between changes no height") {
  const WeightedDyckWord w = parse_word("* D 0 U * D 0 U *");
  const WeightedDyckWord swapped = ribbon_addition(w, 4, 6);
  CHECK(serialize_word(swapped) == "* D 0 D * U 0 U *");
  CHECK(column_height(swapped, 3) == column_height(w, 3));
  CHECK(column_height(swapped, 7) == column_height(w, 7));

  auto bad_order = try_error([&] { ribbon_addition(w, 6, 4); });
  REQUIRE(bad_order);
  CHECK(bad_order->code() == Errc::BadPositions);
  auto bad_letters = try_error([&] { ribbon_addition(w, 2, 6); });
  REQUIRE(bad_letters);
  CHECK(bad_letters->code() == Errc::BadPositions);
}

TEST_CASE("insertion follows the four steps") {
  CHECK(serialize_word(insert(WeightedDyckWord::empty(), 0)) == "* D 0 U *");
  const WeightedDyckWord one = parse_word("* D 0 U *");
  // Right of the special weight: no ribbon.
  CHECK(serialize_word(insert(one, 1)) == "* D 0 U * D 0 U *");
  // Left of the special weight: ribbon between the new column and it.
  CHECK(serialize_word(insert(one, 0)) == "* D 0 D * U 0 U *");

  auto range = try_error([&] { insert(one, 2); });
  REQUIRE(range);
  CHECK(range->code() == Errc::IndexOutOfRange);
}

TEST_CASE("inverse insertion undoes insertion") {
  const InverseInsertResult base = inverse_insert(parse_word("* D 0 U *"));
  CHECK(base.word == WeightedDyckWord::empty());
  CHECK(base.at == 0);

  const InverseInsertResult ribboned = inverse_insert(parse_word("* D 0 D * U 0 U *"));
  CHECK(serialize_word(ribboned.word) == "* D 0 U *");
  CHECK(ribboned.at == 0);

  const InverseInsertResult plain = inverse_insert(parse_word("* D 0 U * D 0 U *"));
  CHECK(serialize_word(plain.word) == "* D 0 U *");
  CHECK(plain.at == 1);

  auto empty = try_error([] { inverse_insert(WeightedDyckWord::empty()); });
  REQUIRE(empty);
  CHECK(empty->code() == Errc::EmptyWord);
}

TEST_CASE("insertion round trip and special-weight invariant, small sizes") {
  for (int n = 0; n <= 4; ++n) {
    for (const WeightedDyckWord& w : WordRange(n)) {
      for (int k = 0; k <= n; ++k) {
        const WeightedDyckWord grown = insert(w, k);
        CHECK(grown.size() == n + 1);
        // The new weight becomes the special weight.
        CHECK(special_weight_index(grown) == 4 * k + 3);
        const InverseInsertResult back = inverse_insert(grown);
        CHECK(back.word == w);
        CHECK(back.at == k);
      }
    }
  }
}

TEST_CASE("history tables") {
  CHECK(serialize_history(history_of(parse_word(kWord24153))) == "0,0,2,1,3");
  CHECK(serialize_history(history_of(parse_word("* D 0 U * D 0 U * D 0 U *"))) == "0,1,2");
  CHECK(history_of(WeightedDyckWord::empty()).size() == 0);

  CHECK(serialize_word(from_history(parse_history("0,0,2,1,3"))) == kWord24153);
  CHECK(serialize_word(from_history(parse_history("0"))) == "* D 0 U *");
  CHECK(serialize_word(from_history(parse_history("0,0"))) == "* D 0 D * U 0 U *");
  CHECK(from_history(HistoryTable{}) == WeightedDyckWord::empty());

  auto bound = try_error([] { parse_history("0,2"); });
  REQUIRE(bound);
  CHECK(bound->code() == Errc::InvalidHistory);
  auto junk = try_error([] { parse_history("0,x"); });
  REQUIRE(junk);
  CHECK(junk->code() == Errc::InvalidHistory);
}
