#include "mmcwpa/window.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "mmcwpa/baselines.hpp"

namespace mmcwpa {

std::string_view mode_name(Mode mode) noexcept {
  switch (mode) {
    case Mode::mmcwpa:
      return "mmcwpa";
    case Mode::mcwpa_legacy:
      return "mcwpa-legacy";
    case Mode::levenshtein:
      return "levenshtein";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(std::string_view name) noexcept {
  for (Mode mode : {Mode::mmcwpa, Mode::mcwpa_legacy, Mode::levenshtein}) {
    if (mode_name(mode) == name) return mode;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// SubfieldList

SubfieldList::SubfieldList(const Field& field) {
  if (field.empty()) return;
  Subfield sub;
  sub.units = Units(field.units());
  sub.origin.resize(sub.units.size());
  for (std::size_t k = 0; k < sub.origin.size(); ++k) sub.origin[k] = k;
  subfields_.push_back(std::move(sub));
}

SubfieldList SubfieldList::from_pieces(const std::vector<Units>& pieces) {
  SubfieldList list;
  std::size_t position = 0;
  for (const auto& piece : pieces) {
    if (piece.empty()) continue;
    Subfield sub;
    sub.units = piece;
    sub.origin.resize(piece.size());
    for (auto& o : sub.origin) o = position++;
    list.subfields_.push_back(std::move(sub));
  }
  return list;
}

std::size_t SubfieldList::remaining() const noexcept {
  std::size_t total = 0;
  for (const auto& sub : subfields_) total += sub.size();
  return total;
}

std::size_t SubfieldList::longest() const noexcept {
  std::size_t best = 0;
  for (const auto& sub : subfields_) best = std::max(best, sub.size());
  return best;
}

SubfieldList SubfieldList::concatenated() const {
  SubfieldList joined;
  joined.consumed_ = consumed_;
  if (subfields_.size() <= 1) {
    joined.subfields_ = subfields_;
    return joined;
  }
  Subfield all;
  all.units.reserve(remaining());
  all.origin.reserve(remaining());
  for (const auto& sub : subfields_) {
    all.units += sub.units;
    all.origin.insert(all.origin.end(), sub.origin.begin(), sub.origin.end());
  }
  joined.subfields_.push_back(std::move(all));
  return joined;
}

std::vector<Units> SubfieldList::pieces() const {
  std::vector<Units> out;
  out.reserve(subfields_.size());
  for (const auto& sub : subfields_) out.push_back(sub.units);
  return out;
}

SubfieldList split_on_match(const SubfieldList& subs, std::size_t index, std::size_t offset,
                            std::size_t length) {
  if (index >= subs.size()) throw std::out_of_range("split_on_match: subfield index out of range");
  const Subfield& target = subs[index];
  if (length == 0 || offset > target.size() || length > target.size() - offset) {
    throw std::out_of_range("split_on_match: match does not lie inside the subfield");
  }

  SubfieldList out;
  out.consumed_ = subs.consumed_ + length;
  out.subfields_.reserve(subs.size() + 1);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (i != index) {
      out.subfields_.push_back(subs[i]);
      continue;
    }
    if (offset > 0) {
      Subfield before;
      before.units = target.units.substr(0, offset);
      before.origin.assign(target.origin.begin(), target.origin.begin() + offset);
      out.subfields_.push_back(std::move(before));
    }
    const std::size_t tail = offset + length;
    if (tail < target.size()) {
      Subfield after;
      after.units = target.units.substr(tail);
      after.origin.assign(target.origin.begin() + tail, target.origin.end());
      out.subfields_.push_back(std::move(after));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pattern search

std::vector<UnitsView> enumerate_patterns(UnitsView subfield, std::size_t window) {
  if (window == 0) throw std::invalid_argument("enumerate_patterns: window must be at least 1");
  std::vector<UnitsView> out;
  if (window > subfield.size()) return out;
  out.reserve(subfield.size() - window + 1);
  for (std::size_t start = 0; start + window <= subfield.size(); ++start) {
    out.push_back(subfield.substr(start, window));
  }
  return out;
}

namespace {

// Polynomial hash modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBase = 1'000'003;

__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const Wide product = static_cast<Wide>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(product & kMod) + static_cast<std::uint64_t>(product >> 61);
  if (r >= kMod) r -= kMod;
  return r;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kMod) r -= kMod;
  return r;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kMod - b; }

/// Calls visit(offset, hash) for every length-`window` factor of `units`,
/// left to right, stopping early when visit returns true.
template <typename Visit>
bool for_each_factor_hash(UnitsView units, std::size_t window, std::uint64_t top_power, Visit&& visit) {
  if (window > units.size()) return false;
  std::uint64_t h = 0;
  for (std::size_t k = 0; k < window; ++k) h = add_mod(mul_mod(h, kBase), units[k] + 1);
  for (std::size_t start = 0;; ++start) {
    if (visit(start, h)) return true;
    if (start + window >= units.size()) return false;
    h = sub_mod(h, mul_mod(units[start] + 1, top_power));
    h = add_mod(mul_mod(h, kBase), units[start + window] + 1);
  }
}

struct IndexedFactor {
  std::uint64_t hash;
  std::uint32_t subfield;
  std::uint32_t offset;
};

/// Every length-`window` factor of the Y subfields, sorted by hash and,
/// within one hash, by scan position.
class FactorIndex {
 public:
  FactorIndex(const SubfieldList& y, std::size_t window, std::uint64_t top_power) {
    for (std::size_t s = 0; s < y.size(); ++s) {
      for_each_factor_hash(y[s].units, window, top_power, [&](std::size_t off, std::uint64_t h) {
        factors_.push_back({h, static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(off)});
        return false;
      });
    }
    std::stable_sort(factors_.begin(), factors_.end(),
                     [](const IndexedFactor& a, const IndexedFactor& b) { return a.hash < b.hash; });
  }

  std::span<const IndexedFactor> candidates(std::uint64_t hash) const {
    auto lo = std::lower_bound(factors_.begin(), factors_.end(), hash,
                               [](const IndexedFactor& f, std::uint64_t h) { return f.hash < h; });
    auto hi = lo;
    while (hi != factors_.end() && hi->hash == hash) ++hi;
    return {lo, hi};
  }

  bool empty() const noexcept { return factors_.empty(); }

 private:
  std::vector<IndexedFactor> factors_;
};

std::uint64_t power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t result = 1;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base);
    base = mul_mod(base, base);
    exponent >>= 1;
  }
  return result;
}

}  // namespace

std::optional<WindowMatch> find_match(const SubfieldList& x, const SubfieldList& y,
                                      std::size_t window) {
  if (window == 0) throw std::invalid_argument("find_match: window must be at least 1");
  if (x.longest() < window || y.longest() < window) return std::nullopt;

  const std::uint64_t top_power = power(kBase, window - 1);
  const FactorIndex index(y, window, top_power);

  std::optional<WindowMatch> found;
  for (std::size_t xs = 0; xs < x.size() && !found; ++xs) {
    const UnitsView units = x[xs].units;
    for_each_factor_hash(units, window, top_power, [&](std::size_t off, std::uint64_t h) {
      const UnitsView pattern = units.substr(off, window);
      for (const IndexedFactor& c : index.candidates(h)) {
        if (UnitsView(y[c.subfield].units).substr(c.offset, window) != pattern) continue;
        WindowMatch m;
        m.length = window;
        m.x_subfield = xs;
        m.x_offset = off;
        m.y_subfield = c.subfield;
        m.y_offset = c.offset;
        m.x_origin = x[xs].origin[off];
        m.y_origin = y[c.subfield].origin[c.offset];
        found = m;
        return true;
      }
      return false;
    });
  }
  return found;
}

SsncResult compute_ssnc(const Field& x, const Field& y, Mode mode) {
  if (mode == Mode::levenshtein) throw std::invalid_argument("compute_ssnc: not a window mode");

  SsncResult result;
  SubfieldList xs(x);
  SubfieldList ys(y);
  for (std::size_t window = std::min(x.length(), y.length()); window >= 1; --window) {
    for (;;) {
      if (mode == Mode::mcwpa_legacy) {
        xs = xs.concatenated();
        ys = ys.concatenated();
      }
      const auto match = find_match(xs, ys, window);
      if (!match) break;
      result.ssnc += match->ssnc_contribution();
      result.trace.push_back(*match);
      xs = split_on_match(xs, match->x_subfield, match->x_offset, window);
      ys = split_on_match(ys, match->y_subfield, match->y_offset, window);
    }
  }
  return result;
}

SimilarityResult similarity(const Field& x, const Field& y, Mode mode) {
  SimilarityResult result;
  result.n = x.length();
  result.m = y.length();
  result.mode = mode;

  if (mode == Mode::levenshtein) {
    const auto edit = levenshtein(x, y);
    result.score = edit.ratio;
    result.edit_distance = edit.distance;
    return result;
  }

  const std::size_t total = result.n + result.m;
  if (total == 0) {
    result.score = 1.0;
    return result;
  }
  auto ssnc = compute_ssnc(x, y, mode);
  result.ssnc = ssnc.ssnc;
  result.trace = std::move(ssnc.trace);
  result.score = std::sqrt(static_cast<double>(result.ssnc)) / static_cast<double>(total);
  return result;
}

double similarity_score(std::string_view x, std::string_view y, Mode mode) {
  return similarity(make_field(x), make_field(y), mode).score;
}

}  // namespace mmcwpa
