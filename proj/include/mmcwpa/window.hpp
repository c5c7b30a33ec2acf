#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mmcwpa/field.hpp"

namespace mmcwpa {

enum class Mode { mmcwpa, mcwpa_legacy, levenshtein };

/// CLI spelling: "mmcwpa", "mcwpa-legacy", "levenshtein".
std::string_view mode_name(Mode mode) noexcept;
std::optional<Mode> parse_mode(std::string_view name) noexcept;

/// A run of still-unmatched units. `origin[k]` is the position of
/// `units[k]` in the field the subfield was cut from.
struct Subfield {
  Units units;
  std::vector<std::size_t> origin;

  std::size_t size() const noexcept { return units.size(); }
};

/// Ordered, non-empty factors of a field that remain after matched regions
/// have been removed. Matched regions are boundaries: units of different
/// subfields are never contiguous.
class SubfieldList {
 public:
  SubfieldList() = default;

  /// The whole field as one subfield (or no subfield when empty).
  explicit SubfieldList(const Field& field);

  /// Subfields given directly; origins are assigned as if the pieces were
  /// laid end to end. Empty pieces are dropped.
  static SubfieldList from_pieces(const std::vector<Units>& pieces);

  const std::vector<Subfield>& subfields() const noexcept { return subfields_; }
  std::size_t size() const noexcept { return subfields_.size(); }
  bool empty() const noexcept { return subfields_.empty(); }
  const Subfield& operator[](std::size_t i) const { return subfields_[i]; }

  /// Units already matched and removed.
  std::size_t consumed() const noexcept { return consumed_; }
  /// Units still available, i.e. the sum of subfield lengths.
  std::size_t remaining() const noexcept;
  std::size_t longest() const noexcept;

  /// Single-subfield view of the list, as the unpatched algorithm sees it.
  SubfieldList concatenated() const;

  std::vector<Units> pieces() const;

 private:
  friend SubfieldList split_on_match(const SubfieldList&, std::size_t, std::size_t, std::size_t);

  std::vector<Subfield> subfields_;
  std::size_t consumed_ = 0;
};

/// One matched window pattern. Indices and offsets refer to the subfield
/// lists as they were when the match was found.
struct WindowMatch {
  std::size_t length = 0;
  std::size_t x_subfield = 0;
  std::size_t x_offset = 0;
  std::size_t y_subfield = 0;
  std::size_t y_offset = 0;
  /// Original-field position of the first matched unit on each side.
  std::size_t x_origin = 0;
  std::size_t y_origin = 0;

  /// (2 * length)^2: both fields contribute `length` units.
  std::uint64_t ssnc_contribution() const noexcept {
    return 4 * static_cast<std::uint64_t>(length) * length;
  }

  friend bool operator==(const WindowMatch&, const WindowMatch&) = default;
};

struct SsncResult {
  std::uint64_t ssnc = 0;
  std::vector<WindowMatch> trace;
};

struct SimilarityResult {
  double score = 0.0;
  std::uint64_t ssnc = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  Mode mode = Mode::mmcwpa;
  std::vector<WindowMatch> trace;
  /// Only set in levenshtein mode.
  std::size_t edit_distance = 0;
};

/// All contiguous factors of length `window`, left to right.
/// Throws std::invalid_argument when window is 0.
std::vector<UnitsView> enumerate_patterns(UnitsView subfield, std::size_t window);

/// First pattern of length `window` taken from `x` that also occurs in `y`.
///
/// Scan order: X subfields in list order, pattern start offsets left to
/// right; each pattern is looked up in the Y subfields in list order and the
/// leftmost occurrence inside the first Y subfield containing it wins.
/// Patterns never cross subfield boundaries.
std::optional<WindowMatch> find_match(const SubfieldList& x, const SubfieldList& y,
                                      std::size_t window);

/// Removes units [offset, offset + length) of subfield `index`, replacing it
/// with the non-empty parts before and after the match.
/// Throws std::out_of_range if the match does not lie inside the subfield.
SubfieldList split_on_match(const SubfieldList& subs, std::size_t index, std::size_t offset,
                            std::size_t length);

/// Contracting-window accumulation of (2L)^2 over all matches.
///
/// The window starts at min(n, m) and shrinks to 1. At each width matches
/// are taken one at a time, restarting the scan from the head of the X list
/// after each split, until nothing of that width is left.
/// `Mode::mcwpa_legacy` re-joins the remaining units into one subfield per
/// side before every scan, so windows may span removed regions.
/// Throws std::invalid_argument for Mode::levenshtein.
SsncResult compute_ssnc(const Field& x, const Field& y, Mode mode = Mode::mmcwpa);

/// sqrt(ssnc / (n + m)^2) for the window modes; both empty gives 1, one
/// empty gives 0. Levenshtein mode reports the normalized edit ratio.
SimilarityResult similarity(const Field& x, const Field& y, Mode mode = Mode::mmcwpa);

double similarity_score(std::string_view x, std::string_view y, Mode mode = Mode::mmcwpa);

}  // namespace mmcwpa
