#include "mmcwpa/corpusgen.hpp"

#include <chrono>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

#include "mmcwpa/utf8.hpp"
#include "mmcwpa/window.hpp"

namespace mmcwpa {

WeightTableError::WeightTableError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

constexpr std::size_t kMaxTokenUnits = 8;

void check_entry(const std::string& token, double weight, std::size_t line) {
  const auto units = decode_utf8(token).size();
  if (units == 0) throw WeightTableError(line, "empty token");
  if (units > kMaxTokenUnits) throw WeightTableError(line, "token longer than 8 units: " + token);
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw WeightTableError(line, "weight must be a positive number");
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

WeightTable::WeightTable(const std::vector<std::pair<std::string, double>>& entries) {
  if (entries.empty()) throw WeightTableError(0, "weight table is empty");
  std::set<std::string> seen;
  double total = 0.0;
  for (const auto& [token, weight] : entries) {
    check_entry(token, weight, 0);
    if (!seen.insert(token).second) throw WeightTableError(0, "duplicate token: " + token);
    total += weight;
  }
  double running = 0.0;
  for (const auto& [token, weight] : entries) {
    entries_.push_back({token, weight / total});
    running += weight / total;
    cumulative_.push_back(running);
  }
}

WeightTable WeightTable::parse(std::istream& in) {
  std::vector<std::pair<std::string, double>> entries;
  std::set<std::string> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw WeightTableError(line_no, "expected TOKEN<TAB>WEIGHT");
    const std::string token(line.substr(0, tab));
    const std::string_view weight_text = trim(line.substr(tab + 1));

    double weight = 0.0;
    const auto* end = weight_text.data() + weight_text.size();
    const auto [ptr, ec] = std::from_chars(weight_text.data(), end, weight);
    if (ec != std::errc() || ptr != end || weight_text.empty()) {
      throw WeightTableError(line_no, "malformed weight '" + std::string(weight_text) + "'");
    }
    check_entry(token, weight, line_no);
    if (!seen.insert(token).second) throw WeightTableError(line_no, "duplicate token: " + token);
    entries.emplace_back(token, weight);
  }
  if (entries.empty()) throw WeightTableError(0, "weight table is empty");
  return WeightTable(entries);
}

WeightTable WeightTable::nucleotides() { return WeightTable({{"A", 1}, {"C", 1}, {"G", 1}, {"T", 1}}); }

CorpusGenerator::CorpusGenerator(WeightTable table, std::uint64_t seed)
    : table_(std::move(table)), engine_(seed) {}

const std::string& CorpusGenerator::next_token() {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  const auto& cumulative = table_.cumulative_;
  for (std::size_t k = 0; k < cumulative.size(); ++k) {
    if (u < cumulative[k]) return table_.entries_[k].token;
  }
  return table_.entries_.back().token;
}

std::string CorpusGenerator::next(std::size_t target_length) {
  std::u32string units;
  while (units.size() < target_length) units += decode_utf8(next_token());
  units.resize(target_length);
  return encode_utf8(units);
}

std::string generate(const WeightTable& table, std::size_t target_length, std::uint64_t seed) {
  CorpusGenerator gen(table, seed);
  return gen.next(target_length);
}

std::vector<TimingRow> time_compare(const std::vector<std::size_t>& n_values, std::size_t trials,
                                    std::uint64_t seed, const WeightTable& table) {
  if (trials == 0) throw std::invalid_argument("time_compare: trials must be at least 1");
  using Clock = std::chrono::steady_clock;

  CorpusGenerator gen(table, seed);
  std::vector<TimingRow> rows;
  for (std::size_t n : n_values) {
    double total = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const Field a = make_field(gen.next(n));
      const Field b = make_field(gen.next(n));
      const auto start = Clock::now();
      const auto result = similarity(a, b, Mode::mmcwpa);
      const auto stop = Clock::now();
      // Keeps the comparison from being optimized away.
      if (result.score < 0.0) throw std::logic_error("negative score");
      total += std::chrono::duration<double>(stop - start).count();
    }
    rows.push_back({n, total / static_cast<double>(trials)});
  }
  return rows;
}

}  // namespace mmcwpa
