#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmcwpa {

class WeightTableError : public std::runtime_error {
 public:
  WeightTableError(std::size_t line, const std::string& what);
  /// 1-based line in the source text, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Tokens (1..8 units each) with positive weights, kept in insertion order.
/// Weights are normalized to sum to 1 on construction.
class WeightTable {
 public:
  struct Entry {
    std::string token;
    double weight;  // normalized
  };

  /// Throws WeightTableError on an empty table, a non-positive weight, an
  /// empty or over-long token, or a duplicate token.
  explicit WeightTable(const std::vector<std::pair<std::string, double>>& entries);

  /// One `TOKEN<TAB>WEIGHT` per line; blank lines and lines starting with
  /// `#` are skipped. Errors carry the offending line number.
  static WeightTable parse(std::istream& in);

  /// A, C, G, T with equal weight.
  static WeightTable nucleotides();

  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  std::vector<Entry> entries_;
  std::vector<double> cumulative_;

  friend class CorpusGenerator;
};

/// Deterministic weighted token sampler.
///
/// Procedure, reproducible on any conforming C++ implementation:
///  1. the engine is std::mt19937_64 seeded with `seed`;
///  2. each draw takes one 64-bit output r and forms u = (r >> 11) * 2^-53;
///  3. the chosen token is the first entry, in table order, whose cumulative
///     normalized weight exceeds u (the last entry if rounding leaves none);
///  4. a string of length L concatenates drawn tokens until it holds at
///     least L units, then keeps the first L units.
class CorpusGenerator {
 public:
  CorpusGenerator(WeightTable table, std::uint64_t seed);

  const std::string& next_token();
  std::string next(std::size_t target_length);

 private:
  WeightTable table_;
  std::mt19937_64 engine_;
};

/// One string of exactly `target_length` units from a fresh generator.
std::string generate(const WeightTable& table, std::size_t target_length, std::uint64_t seed);

struct TimingRow {
  std::size_t n = 0;
  double mean_seconds = 0.0;
};

/// Mean wall-clock time of an mmcwpa comparison between two random fields
/// of length n, over `trials` fresh pairs per n.
/// Throws std::invalid_argument when trials is 0.
std::vector<TimingRow> time_compare(const std::vector<std::size_t>& n_values, std::size_t trials,
                                    std::uint64_t seed,
                                    const WeightTable& table = WeightTable::nucleotides());

}  // namespace mmcwpa
