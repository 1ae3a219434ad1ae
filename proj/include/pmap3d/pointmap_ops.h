#pragma once

#include "pmap3d/types.h"

namespace pmap3d {

// Back-projects a depthmap into the camera frame. For every valid pixel
// (i, j) the output point is K^-1 * (i*d, j*d, d), so its z component equals
// the depth exactly and pointmap_to_depth inverts this bit for bit. Invalid
// pixels stay invalid.
Pointmap depth_to_pointmap(const DepthMap& depth, const Intrinsics& intrinsics);

// Extracts the z component as depth. Pixels with z <= 0 are marked invalid
// in the output even when valid in the input.
DepthMap pointmap_to_depth(const Pointmap& pm);

// Re-expresses a pointmap given in `from_pose`'s camera frame in `to_pose`'s
// camera frame (both poses world-to-camera). Validity is preserved.
Pointmap change_frame(const Pointmap& pm, const RigidPose& from_pose,
                      const RigidPose& to_pose);

// Builds the ground-truth pair for views (n, m): view1 is n's geometry in
// its own camera frame, view2 is m's geometry expressed in n's frame.
// Validity masks equal the per-view depth validity masks.
GtPair make_gt_pair(const ViewGeometry& view_n, const ViewGeometry& view_m);

}  // namespace pmap3d
