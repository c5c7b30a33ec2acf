#include <doctest.h>

#include <map>
#include <sstream>
#include <stdexcept>

#include "mmcwpa/corpusgen.hpp"

using namespace mmcwpa;

namespace {

WeightTable parse(const std::string& text) {
  std::istringstream in(text);
  return WeightTable::parse(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const WeightTableError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("generate basics") {
  const WeightTable single({{"AAA", 1.0}});
  CHECK(generate(single, 6, 1) == "AAAAAA");
  CHECK(generate(single, 6, 99) == "AAAAAA");
  CHECK(generate(single, 4, 0) == "AAAA");
  CHECK(generate(WeightTable::nucleotides(), 0, 5).empty());
}

TEST_CASE("generate golden value") {
  const WeightTable table({{"ATG", 1.0}, {"TAA", 1.0}});
  const auto s = generate(table, 9, 42);
  CHECK(s.size() == 9);
  CHECK(s == "TAATAATAA");
}

TEST_CASE("generation is deterministic per seed") {
  const WeightTable table({{"ATG", 3.0}, {"GC", 1.0}, {"T", 0.5}});
  CHECK(generate(table, 500, 7) == generate(table, 500, 7));
  CHECK(generate(table, 500, 7) != generate(table, 500, 8));

  CorpusGenerator a(table, 123), b(table, 123);
  for (int k = 0; k < 50; ++k) CHECK(a.next(17) == b.next(17));
}

TEST_CASE("multi-byte tokens are truncated by units") {
  const WeightTable table({{"\xC3\xA3\xC3\xA9", 1.0}});  // "ãé"
  CHECK(generate(table, 3, 0) == "\xC3\xA3\xC3\xA9\xC3\xA3");
}

TEST_CASE("token frequencies follow the normalized weights") {
  const WeightTable table({{"A", 1.0}, {"C", 2.0}, {"G", 3.0}, {"T", 4.0}});
  CHECK(table.entries()[3].weight == doctest::Approx(0.4));

  CorpusGenerator gen(table, 2024);
  std::map<std::string, double> counts;
  constexpr int kSamples = 100000;
  for (int k = 0; k < kSamples; ++k) counts[gen.next_token()] += 1;

  double chi2 = 0.0;
  for (const auto& e : table.entries()) {
    const double expected = e.weight * kSamples;
    chi2 += (counts[e.token] - expected) * (counts[e.token] - expected) / expected;
  }
  // 3 degrees of freedom; p = 0.001 at 16.266.
  CHECK(chi2 < 16.266);
}

TEST_CASE("weight table parsing") {
  const auto t = parse("# codons\nATG\t2\n\nTAA\t0.5\r\n  # indented comment\nGC\t1e-1\n");
  REQUIRE(t.entries().size() == 3);
  CHECK(t.entries()[0].token == "ATG");
  CHECK(t.entries()[0].weight == doctest::Approx(2.0 / 2.6));

  CHECK(error_line("ATG\t1\nTAA 1\n") == 2);
  CHECK(error_line("ATG\tx\n") == 1);
  CHECK(error_line("ATG\t0\n") == 1);
  CHECK(error_line("ATG\t-1\n") == 1);
  CHECK(error_line("ATG\t1\nATG\t2\n") == 2);
  CHECK(error_line("\t1\n") == 1);
  CHECK(error_line("ABCDEFGHI\t1\n") == 1);
  CHECK(error_line("ATG\t1 2\n") == 1);
  CHECK(error_line("# only comments\n") == 0);
  CHECK(error_line("") == 0);

  CHECK_THROWS_AS(WeightTable({}), WeightTableError);
  CHECK_THROWS_AS(WeightTable({{"A", 0.0}}), WeightTableError);
}

TEST_CASE("time_compare") {
  const auto rows = time_compare({50, 100, 200}, 3, 1);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n == 50);
  CHECK(rows[2].n == 200);
  for (const auto& r : rows) CHECK(r.mean_seconds > 0.0);
  CHECK(rows[0].mean_seconds <= rows[2].mean_seconds);

  CHECK_THROWS_AS(time_compare({10}, 0, 1), std::invalid_argument);
}
