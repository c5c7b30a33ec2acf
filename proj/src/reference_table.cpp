#include "mmcwpa/reference_table.hpp"

#include <array>
#include <cmath>

#include "mmcwpa/format.hpp"

namespace mmcwpa {

namespace {

// Published field pairs and scores. "a123b"/"ab123" is listed as 0.6982,
// but the contracting-window procedure yields ssnc = 36 + 4 + 4 = 44 over
// (5 + 5)^2, i.e. 0.6633.
constexpr std::array<ReferenceRow, 16> kRows{{
    {"abc", "def", 0.0000, std::nullopt},
    {"abcdef", "abcdef", 1.0000, std::nullopt},
    {"Austria", "Australia", 0.6731, std::nullopt},
    {"Python", "python", 0.8333, std::nullopt},
    {"a123b", "ab123", 0.6982, 0.6633},
    {"129 Industry Park", "129 Indisttry Park", 0.6101, std::nullopt},
    {"abc de", "abc k de", 0.6388, std::nullopt},
    {"de abc", "de abc", 1.0000, std::nullopt},
    {"abc de", "de abc", 0.6236, std::nullopt},
    {"Fu Hui", "Mr Fu Hui", 0.8000, std::nullopt},
    {"Fu Hui", "Fu Mr Hui", 0.5962, std::nullopt},
    {"abcdefgh ijklmnpo", "abcdefgh ijklmnwo", 0.8843, std::nullopt},
    {"akabc axyz mo", "aabc axyz muo", 0.7768, std::nullopt},
    {"abcdefagha", "aijklamabc", 0.3316, std::nullopt},
    {"Gao Hua Ming", "Gao Ming Hua", 0.5892, std::nullopt},
    {"zeng zeng", "zeng hong", 0.5983, std::nullopt},
}};

double displayed(double score) { return static_cast<double>(score_ticks(score)) / 10000.0; }

}  // namespace

std::span<const ReferenceRow> reference_rows() { return kRows; }

std::string_view status_name(RowStatus status) noexcept {
  switch (status) {
    case RowStatus::pass:
      return "PASS";
    case RowStatus::fail:
      return "FAIL";
    case RowStatus::known_diff:
      return "KNOWN-DIFF";
  }
  return "?";
}

std::vector<RowReport> check_reference_table(Mode mode) {
  std::vector<RowReport> reports;
  reports.reserve(kRows.size());
  for (const auto& row : kRows) {
    RowReport report;
    report.row = &row;
    report.computed = similarity_score(row.fx, row.fy, mode);
    const double shown = displayed(report.computed);
    if (std::abs(shown - row.expected) <= kReferenceTolerance) {
      report.status = RowStatus::pass;
    } else if (row.known_diff && std::abs(shown - *row.known_diff) <= kReferenceTolerance) {
      report.status = RowStatus::known_diff;
    } else {
      report.status = RowStatus::fail;
    }
    reports.push_back(report);
  }
  return reports;
}

bool all_rows_pass(const std::vector<RowReport>& reports) {
  for (const auto& r : reports) {
    if (r.status == RowStatus::fail) return false;
  }
  return true;
}

}  // namespace mmcwpa
