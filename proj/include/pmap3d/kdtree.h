#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

namespace pmap3d {

// Exact 3-d tree for nearest-neighbor queries. Ties on exact distance are
// broken toward the smallest id, matching a naive ascending scan, so results
// are interchangeable with brute force bit for bit.
class KdTree3 {
 public:
  struct Hit {
    int id = std::numeric_limits<int>::max();
    double squared_distance = std::numeric_limits<double>::infinity();
  };

  KdTree3() = default;

  KdTree3(std::vector<Eigen::Vector3d> points, std::vector<int> ids)
      : points_(std::move(points)), ids_(std::move(ids)) {
    order_.resize(points_.size());
    std::iota(order_.begin(), order_.end(), 0);
    nodes_.reserve(points_.size());
    root_ = build(0, static_cast<int>(order_.size()));
  }

  bool empty() const { return points_.empty(); }

  Hit nearest(const Eigen::Vector3d& query) const {
    Hit best;
    if (root_ >= 0) search(root_, query, best);
    return best;
  }

 private:
  struct Node {
    int entry = -1;
    int axis = 0;
    int left = -1;
    int right = -1;
  };

  int build(int lo, int hi) {
    if (lo >= hi) return -1;
    Eigen::Vector3d bb_min = points_[order_[lo]];
    Eigen::Vector3d bb_max = bb_min;
    for (int k = lo + 1; k < hi; ++k) {
      bb_min = bb_min.cwiseMin(points_[order_[k]]);
      bb_max = bb_max.cwiseMax(points_[order_[k]]);
    }
    int axis = 0;
    (bb_max - bb_min).maxCoeff(&axis);

    const int mid = (lo + hi) / 2;
    std::nth_element(order_.begin() + lo, order_.begin() + mid,
                     order_.begin() + hi, [&](int a, int b) {
                       if (points_[a][axis] != points_[b][axis]) {
                         return points_[a][axis] < points_[b][axis];
                       }
                       return a < b;
                     });

    const int node_id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{order_[mid], axis, -1, -1});
    const int left = build(lo, mid);
    const int right = build(mid + 1, hi);
    nodes_[node_id].left = left;
    nodes_[node_id].right = right;
    return node_id;
  }

  void search(int node_id, const Eigen::Vector3d& query, Hit& best) const {
    const Node& node = nodes_[node_id];
    const Eigen::Vector3d& p = points_[node.entry];
    const double d2 = (p - query).squaredNorm();
    const int id = ids_[node.entry];
    if (d2 < best.squared_distance ||
        (d2 == best.squared_distance && id < best.id)) {
      best.squared_distance = d2;
      best.id = id;
    }
    const double diff = query[node.axis] - p[node.axis];
    const int near = diff < 0.0 ? node.left : node.right;
    const int far = diff < 0.0 ? node.right : node.left;
    if (near >= 0) search(near, query, best);
    // <= so equidistant candidates across the split stay reachable and the
    // id tie rule stays exact.
    if (far >= 0 && diff * diff <= best.squared_distance) {
      search(far, query, best);
    }
  }

  std::vector<Eigen::Vector3d> points_;
  std::vector<int> ids_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace pmap3d
