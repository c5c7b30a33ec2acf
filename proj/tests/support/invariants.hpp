#pragma once

// Trace checks shared by the property tests and the acceptance suite. Each
// returns an empty string when the invariant holds, otherwise a description
// of the first violation.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mmcwpa/window.hpp"

namespace invariants {

using mmcwpa::Field;
using mmcwpa::Mode;
using mmcwpa::SimilarityResult;
using mmcwpa::SubfieldList;

inline std::string check_range(const SimilarityResult& r) {
  if (!(r.score >= 0.0 && r.score <= 1.0)) return "score outside [0,1]: " + std::to_string(r.score);
  const std::uint64_t total = r.n + r.m;
  if (r.ssnc > total * total) return "ssnc exceeds (n+m)^2";
  return {};
}

inline std::string check_per_match(const SimilarityResult& r) {
  std::uint64_t sum = 0;
  std::size_t previous = static_cast<std::size_t>(-1);
  std::size_t matched = 0;
  for (const auto& m : r.trace) {
    if (m.length == 0) return "zero-length match";
    if (m.ssnc_contribution() != 4 * static_cast<std::uint64_t>(m.length) * m.length) return "contribution != (2L)^2";
    if (m.length > previous) return "match lengths increase along the trace";
    previous = m.length;
    sum += m.ssnc_contribution();
    matched += m.length;
  }
  if (sum != r.ssnc) return "ssnc != sum of contributions";
  if (matched > std::min(r.n, r.m)) return "matched units exceed min(n, m)";
  return {};
}

/// Matched regions never overlap. In mmcwpa mode each match is a contiguous
/// run of original positions, so the regions are intervals.
inline std::string check_conservation(const Field& x, const Field& y, const SimilarityResult& r) {
  std::vector<bool> used_x(x.length()), used_y(y.length());
  for (const auto& m : r.trace) {
    if (m.x_origin + m.length > x.length() || m.y_origin + m.length > y.length()) return "match outside field";
    for (std::size_t k = 0; k < m.length; ++k) {
      if (r.mode == Mode::mmcwpa) {
        if (used_x[m.x_origin + k] || used_y[m.y_origin + k]) return "matched regions overlap";
        used_x[m.x_origin + k] = used_y[m.y_origin + k] = true;
      }
    }
  }
  return {};
}

/// Replays the trace with split_on_match: every match must lie inside one
/// current subfield on each side, with identical units, and its units must
/// be contiguous in the original field. Once the trace is exhausted the
/// remainders share no unit.
inline std::string check_boundaries(const Field& x, const Field& y, const SimilarityResult& r) {
  SubfieldList xs(x), ys(y);
  for (const auto& m : r.trace) {
    if (r.mode == Mode::mcwpa_legacy) {
      xs = xs.concatenated();
      ys = ys.concatenated();
    }
    if (m.x_subfield >= xs.size() || m.y_subfield >= ys.size()) return "subfield index out of range";
    const auto& sx = xs[m.x_subfield];
    const auto& sy = ys[m.y_subfield];
    if (m.x_offset + m.length > sx.size() || m.y_offset + m.length > sy.size()) {
      return "match spans a subfield boundary";
    }
    if (sx.units.substr(m.x_offset, m.length) != sy.units.substr(m.y_offset, m.length)) {
      return "matched units differ";
    }
    if (sx.origin[m.x_offset] != m.x_origin || sy.origin[m.y_offset] != m.y_origin) return "origin mismatch";
    if (r.mode == Mode::mmcwpa) {
      for (std::size_t k = 1; k < m.length; ++k) {
        if (sx.origin[m.x_offset + k] != m.x_origin + k || sy.origin[m.y_offset + k] != m.y_origin + k) {
          return "match joins units that were not contiguous";
        }
      }
    }
    xs = mmcwpa::split_on_match(xs, m.x_subfield, m.x_offset, m.length);
    ys = mmcwpa::split_on_match(ys, m.y_subfield, m.y_offset, m.length);
  }
  if (xs.consumed() + xs.remaining() != x.length()) return "x units not conserved";
  if (ys.consumed() + ys.remaining() != y.length()) return "y units not conserved";
  std::set<char32_t> left;
  for (const auto& s : xs.subfields()) left.insert(s.units.begin(), s.units.end());
  for (const auto& s : ys.subfields()) {
    for (char32_t u : s.units) {
      if (left.count(u)) return "a common unit was left unmatched";
    }
  }
  return {};
}

inline std::string check_all(const Field& x, const Field& y, const SimilarityResult& r) {
  for (auto msg : {check_range(r), check_per_match(r), check_conservation(x, y, r), check_boundaries(x, y, r)}) {
    if (!msg.empty()) return msg;
  }
  return {};
}

/// Random string over the first `alphabet` letters of a mixed pool.
inline std::u32string random_units(std::mt19937_64& rng, std::size_t max_len, std::size_t alphabet) {
  static constexpr char32_t kPool[] = U"abcdefgh ACGTxyzé中";
  alphabet = std::min<std::size_t>(alphabet, std::size(kPool) - 1);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet - 1);
  std::u32string s(len(rng), U'a');
  for (auto& c : s) c = kPool[pick(rng)];
  return s;
}

}  // namespace invariants
