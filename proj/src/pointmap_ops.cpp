#include "pmap3d/pointmap_ops.h"

namespace pmap3d {

Pointmap depth_to_pointmap(const DepthMap& depth,
                           const Intrinsics& intrinsics) {
  if (intrinsics.focal <= 0.0) {
    throw Error("precondition", "focal must be positive");
  }
  Pointmap out(depth.size);
  for (int j = 0; j < depth.size.height; ++j) {
    for (int i = 0; i < depth.size.width; ++i) {
      const int idx = depth.index(i, j);
      if (!depth.valid[idx]) continue;
      out.points[idx] = intrinsics.backproject(i, j, depth.depth[idx]);
      out.valid[idx] = 1;
    }
  }
  return out;
}

DepthMap pointmap_to_depth(const Pointmap& pm) {
  DepthMap out(pm.size);
  for (int idx = 0; idx < pm.size.pixels(); ++idx) {
    if (!pm.valid[idx]) continue;
    const double z = pm.points[idx].z();
    if (z <= 0.0) continue;
    out.depth[idx] = z;
    out.valid[idx] = 1;
  }
  return out;
}

Pointmap change_frame(const Pointmap& pm, const RigidPose& from_pose,
                      const RigidPose& to_pose) {
  // to_pose o from_pose^-1, computed once.
  const RigidPose relative = to_pose.compose(from_pose.inverse());
  Pointmap out(pm.size);
  out.valid = pm.valid;
  for (int idx = 0; idx < pm.size.pixels(); ++idx) {
    if (pm.valid[idx]) out.points[idx] = relative.apply(pm.points[idx]);
  }
  return out;
}

GtPair make_gt_pair(const ViewGeometry& view_n, const ViewGeometry& view_m) {
  if (view_n.depth.size.pixels() == 0 || view_m.depth.size.pixels() == 0) {
    throw Error("incomplete_scene", "view lacks a depthmap");
  }
  GtPair pair;
  pair.view1 = depth_to_pointmap(view_n.depth, view_n.intrinsics);
  pair.view2 = change_frame(depth_to_pointmap(view_m.depth, view_m.intrinsics),
                            view_m.pose, view_n.pose);
  return pair;
}

}  // namespace pmap3d
