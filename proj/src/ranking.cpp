#include "mmcwpa/ranking.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmcwpa {

std::vector<RankedCandidate> rank(const std::string& query, const std::vector<std::string>& candidates,
                                  Mode mode, std::optional<std::size_t> top_k) {
  if (top_k && *top_k == 0) throw std::invalid_argument("rank: top_k must be at least 1");

  const Field q = make_field(query);
  std::vector<RankedCandidate> out;
  out.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.push_back({i, candidates[i], similarity(q, make_field(candidates[i]), mode).score, 0});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedCandidate& a, const RankedCandidate& b) { return a.score > b.score; });
  if (top_k && out.size() > *top_k) out.resize(*top_k);
  for (std::size_t r = 0; r < out.size(); ++r) out[r].rank = r + 1;
  return out;
}

std::vector<DuplicatePair> dedup_pairs(const std::vector<std::string>& records, Mode mode,
                                       double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("dedup_pairs: threshold must lie in [0, 1]");
  }
  std::vector<Field> fields;
  fields.reserve(records.size());
  for (const auto& r : records) fields.push_back(make_field(r));

  std::vector<DuplicatePair> out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    for (std::size_t j = i + 1; j < fields.size(); ++j) {
      const double score = similarity(fields[i], fields[j], mode).score;
      if (score >= threshold) out.push_back({i, j, score});
    }
  }
  // Pairs are generated in (i, j) order, so a stable sort on score alone
  // leaves equal scores ordered by (i, j).
  std::stable_sort(out.begin(), out.end(),
                   [](const DuplicatePair& a, const DuplicatePair& b) { return a.score > b.score; });
  return out;
}

}  // namespace mmcwpa
