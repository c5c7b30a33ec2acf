#include "mmcwpa/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace mmcwpa {

EditDistanceResult levenshtein(const Field& x, const Field& y) {
  const UnitsView a = x.units();
  const UnitsView b = y.units();

  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> curr(b.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t substitution = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, substitution});
    }
    std::swap(prev, curr);
  }

  EditDistanceResult result;
  result.distance = prev[b.size()];
  const std::size_t longest = std::max(a.size(), b.size());
  result.ratio = longest == 0 ? 1.0
                              : 1.0 - static_cast<double>(result.distance) / static_cast<double>(longest);
  return result;
}

}  // namespace mmcwpa
