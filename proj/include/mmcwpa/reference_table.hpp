#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mmcwpa/window.hpp"

namespace mmcwpa {

struct ReferenceRow {
  std::string_view fx;
  std::string_view fy;
  double expected;
  /// Set when the published value cannot be reproduced; holds the value the
  /// algorithm actually yields.
  std::optional<double> known_diff;
};

/// The 16 published field pairs with their mmcwpa scores.
std::span<const ReferenceRow> reference_rows();

enum class RowStatus { pass, fail, known_diff };

std::string_view status_name(RowStatus status) noexcept;

struct RowReport {
  const ReferenceRow* row = nullptr;
  double computed = 0.0;
  RowStatus status = RowStatus::fail;
};

/// Published values are compared against the 4-decimal display value.
inline constexpr double kReferenceTolerance = 5e-5;

std::vector<RowReport> check_reference_table(Mode mode = Mode::mmcwpa);

/// True when every row is pass or known_diff.
bool all_rows_pass(const std::vector<RowReport>& reports);

}  // namespace mmcwpa
