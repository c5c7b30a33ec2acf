#include "mmcwpa/format.hpp"

#include <cmath>
#include <cstdio>

namespace mmcwpa {

std::int64_t score_ticks(double score) {
  return static_cast<std::int64_t>(std::floor(score * 10000.0 + 1e-9));
}

std::string format_score(double score) {
  const auto ticks = score_ticks(score);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%04lld", static_cast<long long>(ticks / 10000),
                static_cast<long long>(ticks % 10000));
  return buf;
}

}  // namespace mmcwpa
