#pragma once

#include "skeintail/diagram.hpp"

namespace skein::testing {

// Inserts a one-crossing kink into edge `label` (which must run between
// crossings). Writhe +1 uses the "X 1 1 2 2" shape, -1 the "X 1 2 2 1" shape.
inline Diagram add_kink(const Diagram& d, int label, int sign) {
  auto tuples = d.tuples();
  const int y = 2 * d.edge_count() + 1;
  const int loop = y + 1;
  const Slot head = d.edge_head(label);
  tuples[static_cast<std::size_t>(head.crossing)][static_cast<std::size_t>(head.position)] = y;
  if (sign > 0)
    tuples.push_back({label, y, loop, loop});
  else
    tuples.push_back({label, loop, loop, y});
  return Diagram::from_crossings(tuples, d.free_circles());
}

}  // namespace skein::testing
