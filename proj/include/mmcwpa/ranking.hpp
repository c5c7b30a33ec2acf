#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mmcwpa/window.hpp"

namespace mmcwpa {

struct RankedCandidate {
  std::size_t index = 0;
  std::string text;
  double score = 0.0;
  std::size_t rank = 0;  // 1-based
};

/// Scores every candidate as similarity(query, candidate), sorts by
/// descending score (ties keep input order) and keeps the first `top_k`.
/// Throws std::invalid_argument when top_k is 0.
std::vector<RankedCandidate> rank(const std::string& query, const std::vector<std::string>& candidates,
                                  Mode mode = Mode::mmcwpa,
                                  std::optional<std::size_t> top_k = std::nullopt);

struct DuplicatePair {
  std::size_t i = 0;
  std::size_t j = 0;
  double score = 0.0;

  friend bool operator==(const DuplicatePair&, const DuplicatePair&) = default;
};

/// Every pair i < j whose similarity(records[i], records[j]) is at least
/// `threshold`, by descending score then (i, j). Brute force over all pairs.
/// Throws std::invalid_argument unless 0 <= threshold <= 1.
std::vector<DuplicatePair> dedup_pairs(const std::vector<std::string>& records,
                                       Mode mode = Mode::mmcwpa, double threshold = 0.9);

}  // namespace mmcwpa
