#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pmap3d {

// Runtime error carrying a stable machine-readable category. The CLI maps
// categories to exit codes and tests match on them, so category strings are
// part of the public contract.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(category + ": " + message),
        category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

struct ImageSize {
  int width = 0;
  int height = 0;

  bool operator==(const ImageSize&) const = default;
  int pixels() const { return width * height; }
  bool contains(int i, int j) const {
    return i >= 0 && i < width && j >= 0 && j < height;
  }
};

// Dense W x H grid of 3D points plus a validity mask.
//
// Pixel (i, j) has i along the width axis and j along the height axis;
// storage is row-major with linear index j * width + i. Pixel (i, j) maps to
// image-plane coordinate exactly (i, j) -- there is no half-pixel center
// offset anywhere in the library. Invalid pixels carry meaningless
// coordinates and are skipped by every consumer (losses, solvers, metrics).
struct Pointmap {
  ImageSize size;
  std::vector<Eigen::Vector3d> points;
  std::vector<std::uint8_t> valid;

  Pointmap() = default;
  explicit Pointmap(ImageSize s)
      : size(s),
        points(static_cast<std::size_t>(s.pixels()), Eigen::Vector3d::Zero()),
        valid(static_cast<std::size_t>(s.pixels()), 0) {}

  int index(int i, int j) const { return j * size.width + i; }
  const Eigen::Vector3d& at(int i, int j) const { return points[index(i, j)]; }
  Eigen::Vector3d& at(int i, int j) { return points[index(i, j)]; }
  bool is_valid(int i, int j) const { return valid[index(i, j)] != 0; }

  int valid_count() const {
    int n = 0;
    for (std::uint8_t v : valid) n += v != 0;
    return n;
  }
};

// Per-pixel depth (z in the camera frame, scene units). Valid depths are
// finite and strictly positive.
struct DepthMap {
  ImageSize size;
  std::vector<double> depth;
  std::vector<std::uint8_t> valid;

  DepthMap() = default;
  explicit DepthMap(ImageSize s)
      : size(s),
        depth(static_cast<std::size_t>(s.pixels()), 0.0),
        valid(static_cast<std::size_t>(s.pixels()), 0) {}

  int index(int i, int j) const { return j * size.width + i; }
  double at(int i, int j) const { return depth[index(i, j)]; }
  bool is_valid(int i, int j) const { return valid[index(i, j)] != 0; }

  int valid_count() const {
    int n = 0;
    for (std::uint8_t v : valid) n += v != 0;
    return n;
  }
};

// Per-pixel positive weights. Weights produced by confidence_activation are
// strictly greater than one.
struct ConfidenceMap {
  ImageSize size;
  std::vector<double> weight;

  ConfidenceMap() = default;
  explicit ConfidenceMap(ImageSize s, double value = 1.0)
      : size(s), weight(static_cast<std::size_t>(s.pixels()), value) {}

  int index(int i, int j) const { return j * size.width + i; }
  double at(int i, int j) const { return weight[index(i, j)]; }
};

// Pinhole intrinsics with square pixels and a single focal length.
struct Intrinsics {
  double focal = 1.0;
  Eigen::Vector2d principal_point = Eigen::Vector2d::Zero();

  // Back-projects pixel (i, j) at depth d into the camera frame. The z
  // component of the result equals d exactly.
  Eigen::Vector3d backproject(double i, double j, double d) const {
    return {(i - principal_point.x()) * d / focal,
            (j - principal_point.y()) * d / focal, d};
  }

  // Projects a camera-frame point to pixel coordinates. Caller guarantees
  // p.z() != 0.
  Eigen::Vector2d project(const Eigen::Vector3d& p) const {
    return {focal * p.x() / p.z() + principal_point.x(),
            focal * p.y() / p.z() + principal_point.y()};
  }

  static Intrinsics centered(double focal, ImageSize size) {
    return {focal, {size.width / 2.0, size.height / 2.0}};
  }
};

// Rigid transform stored as a unit quaternion plus translation. The
// convention is fixed library-wide to WORLD-TO-CAMERA: apply() maps world
// points into the camera frame. Compositions renormalize the quaternion so
// long chains do not drift.
struct RigidPose {
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return rotation * p + translation;
  }

  RigidPose inverse() const {
    const Eigen::Quaterniond qi = rotation.conjugate();
    return {qi, -(qi * translation)};
  }

  // this after other: compose(a, b).apply(x) == a.apply(b.apply(x)).
  RigidPose compose(const RigidPose& other) const {
    return {(rotation * other.rotation).normalized(),
            rotation * other.translation + translation};
  }

  // Camera center in world coordinates.
  Eigen::Vector3d center() const {
    return -(rotation.conjugate() * translation);
  }

  static RigidPose identity() { return {}; }
};

// Scaled rigid transform: apply() maps x to scale * (R x + t). Used for
// pair-to-world transforms in global alignment and for similarity
// (Procrustes) fits.
struct SimTransform {
  double scale = 1.0;
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return scale * (rotation * p + translation);
  }

  SimTransform inverse() const {
    const Eigen::Quaterniond qi = rotation.conjugate();
    return {1.0 / scale, qi, -scale * (qi * translation)};
  }

  // The rigid map between the two frames once the source is brought to the
  // destination's metric scale: x_dst = R (scale * x_src) + scale * t.
  RigidPose rigid_at_scale() const {
    return {rotation.normalized(), scale * translation};
  }

  static SimTransform identity() { return {}; }
};

struct ViewPrediction {
  Pointmap points;
  ConfidenceMap confidence;
};

// Output shape of a pairwise predictor: both pointmaps are expressed in
// view 1's camera frame (by construction; not checkable from the data).
struct PairPrediction {
  ViewPrediction view1;
  ViewPrediction view2;
};

// Ground-truth counterpart of PairPrediction: no confidences.
struct GtPair {
  Pointmap view1;
  Pointmap view2;
};

// Everything needed to build ground-truth pointmaps for one camera.
struct ViewGeometry {
  Intrinsics intrinsics;
  RigidPose pose;  // world-to-camera
  DepthMap depth;
};

}  // namespace pmap3d
