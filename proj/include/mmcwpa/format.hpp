#pragma once

#include <cstdint>
#include <string>

namespace mmcwpa {

/// Score in units of 1e-4, truncated toward zero. Reference scores are
/// published truncated, e.g. sqrt(80/196) = 0.63887... is listed as 0.6388.
/// A 1e-9 guard absorbs floating error on exact grid values like 0.8.
std::int64_t score_ticks(double score);

/// Fixed 4-decimal rendering of score_ticks, e.g. "0.6731", "1.0000".
std::string format_score(double score);

}  // namespace mmcwpa
