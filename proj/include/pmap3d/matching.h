#pragma once

#include "pmap3d/types.h"

namespace pmap3d {

struct Correspondence {
  int i1 = 0, j1 = 0;
  int i2 = 0, j2 = 0;
  double distance = 0.0;
};

using Correspondences = std::vector<Correspondence>;

struct MatchOptions {
  // Below this many valid points on both sides the search scans
  // exhaustively instead of building trees. Both paths return identical
  // results; the knob exists for speed and so tests can force either path.
  int brute_force_threshold = 4096;
};

// Mutual nearest-neighbor correspondences between two pointmaps expressed in
// the same coordinate frame. A pair (a, b) is kept iff b is a's nearest
// valid point in pm2 and a is b's nearest valid point in pm1. Exact
// distance ties resolve to the smallest linear pixel index. A fully invalid
// map yields an empty result. Output is ordered by pm1 pixel index.
Correspondences match_points(const Pointmap& pm1, const Pointmap& pm2,
                             const MatchOptions& options = {});

}  // namespace pmap3d
