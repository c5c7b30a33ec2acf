#include <doctest.h>

#include "mmcwpa/baselines.hpp"
#include "support/oracle.hpp"

using namespace mmcwpa;

TEST_CASE("levenshtein examples") {
  const auto same = levenshtein(make_field("abc"), make_field("abc"));
  CHECK(same.distance == 0);
  CHECK(same.ratio == 1.0);

  const auto gone = levenshtein(make_field("abc"), make_field(""));
  CHECK(gone.distance == 3);
  CHECK(gone.ratio == 0.0);

  // Two insertions ("al"); the recursion oracle agrees.
  CHECK(levenshtein(make_field("Austria"), make_field("Australia")).distance == 2);
  CHECK(oracle::levenshtein(U"Austria", U"Australia") == 2);
  CHECK(levenshtein(Field{}, Field{}).ratio == 1.0);
  CHECK(levenshtein(make_field("kitten"), make_field("sitting")).distance == 3);
}

TEST_CASE("metric axioms over all {a,b} strings up to length 4") {
  const auto all = oracle::all_strings(U"ab", 4);
  std::vector<std::vector<std::size_t>> d(all.size(), std::vector<std::size_t>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      d[i][j] = levenshtein(Field(all[i]), Field(all[j])).distance;
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      REQUIRE(d[i][j] == d[j][i]);
      REQUIRE((d[i][j] == 0) == (i == j));
      REQUIRE(d[i][j] <= std::max(all[i].size(), all[j].size()));
      REQUIRE(d[i][j] == oracle::levenshtein(all[i], all[j]));
      for (std::size_t k = 0; k < all.size(); ++k) REQUIRE(d[i][k] <= d[i][j] + d[j][k]);
    }
  }
}
