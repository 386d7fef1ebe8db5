#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace qbalance {

// Row cap for table and walk enumerations.
inline constexpr std::int64_t kMaxEnumerationRows = std::int64_t{1} << 20;

// Index/weight walk in index order, exported as CSV "z,weight".
struct WalkTrace {
  std::vector<std::array<std::int64_t, 2>> points;

  void write_csv(std::ostream& out) const;
};

}  // namespace qbalance
