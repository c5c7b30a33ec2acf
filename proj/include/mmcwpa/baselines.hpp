#pragma once

#include <cstddef>

#include "mmcwpa/field.hpp"

namespace mmcwpa {

struct EditDistanceResult {
  std::size_t distance = 0;
  /// 1 - distance / max(n, m); 1.0 when both fields are empty.
  double ratio = 1.0;
};

/// Unit-cost insertion/deletion/substitution distance (Wagner-Fischer,
/// two rolling rows).
EditDistanceResult levenshtein(const Field& x, const Field& y);

}  // namespace mmcwpa
