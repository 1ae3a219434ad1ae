#include "pmap3d/loss.h"

#include <algorithm>
#include <cmath>

namespace pmap3d {

namespace {

// Counted pixel = valid in both the prediction and the ground truth.
std::vector<std::uint8_t> counted_mask(const Pointmap& pred,
                                       const Pointmap& gt) {
  if (pred.size != gt.size) {
    throw Error("precondition", "prediction/ground-truth size mismatch");
  }
  std::vector<std::uint8_t> mask(pred.valid.size(), 0);
  for (std::size_t k = 0; k < mask.size(); ++k) {
    mask[k] = pred.valid[k] && gt.valid[k];
  }
  return mask;
}

double masked_norm_factor(const Pointmap& pm1,
                          const std::vector<std::uint8_t>& mask1,
                          const Pointmap& pm2,
                          const std::vector<std::uint8_t>& mask2) {
  double sum = 0.0;
  std::int64_t count = 0;
  for (std::size_t k = 0; k < mask1.size(); ++k) {
    if (mask1[k]) {
      sum += pm1.points[k].norm();
      ++count;
    }
  }
  for (std::size_t k = 0; k < mask2.size(); ++k) {
    if (mask2[k]) {
      sum += pm2.points[k].norm();
      ++count;
    }
  }
  if (count == 0) {
    throw Error("empty_normalization_set", "no valid pixels in either map");
  }
  return sum / static_cast<double>(count);
}

LossReport regression_report(const Pointmap& pred1, const Pointmap& pred2,
                             const Pointmap& gt1, const Pointmap& gt2) {
  LossReport report;
  report.size = pred1.size;
  report.counted[0] = counted_mask(pred1, gt1);
  report.counted[1] = counted_mask(pred2, gt2);
  report.norm_pred =
      masked_norm_factor(pred1, report.counted[0], pred2, report.counted[1]);
  report.norm_gt =
      masked_norm_factor(gt1, report.counted[0], gt2, report.counted[1]);
  if (report.norm_pred <= 0.0 || report.norm_gt <= 0.0) {
    throw Error("precondition", "normalization factor is zero");
  }

  const Pointmap* preds[2] = {&pred1, &pred2};
  const Pointmap* gts[2] = {&gt1, &gt2};
  for (int v = 0; v < 2; ++v) {
    report.per_pixel[v].assign(preds[v]->points.size(), 0.0);
    for (std::size_t k = 0; k < report.counted[v].size(); ++k) {
      if (!report.counted[v][k]) continue;
      report.per_pixel[v][k] = (preds[v]->points[k] / report.norm_pred -
                                gts[v]->points[k] / report.norm_gt)
                                   .norm();
    }
  }
  return report;
}

}  // namespace

double norm_factor(const Pointmap& pm1, const Pointmap& pm2) {
  return masked_norm_factor(pm1, pm1.valid, pm2, pm2.valid);
}

LossReport regression_loss(const Pointmap& pred1, const Pointmap& pred2,
                           const Pointmap& gt1, const Pointmap& gt2) {
  LossReport report = regression_report(pred1, pred2, gt1, gt2);
  double total = 0.0;
  for (int v = 0; v < 2; ++v) {
    for (std::size_t k = 0; k < report.per_pixel[v].size(); ++k) {
      if (report.counted[v][k]) total += report.per_pixel[v][k];
    }
  }
  report.total = total;
  return report;
}

LossReport confidence_loss(const PairPrediction& pred, const GtPair& gt,
                           const LossConfig& cfg) {
  LossReport report = regression_report(pred.view1.points, pred.view2.points,
                                        gt.view1, gt.view2);
  const ConfidenceMap* confs[2] = {&pred.view1.confidence,
                                   &pred.view2.confidence};
  double total = 0.0;
  for (int v = 0; v < 2; ++v) {
    for (std::size_t k = 0; k < report.per_pixel[v].size(); ++k) {
      if (!report.counted[v][k]) continue;
      const double c = confs[v]->weight[k];
      if (!(c > 0.0) || !std::isfinite(c)) {
        throw Error("precondition", "confidence must be strictly positive");
      }
      total += c * report.per_pixel[v][k] - cfg.alpha * std::log(c);
    }
  }
  report.total = total;
  return report;
}

std::array<std::vector<Eigen::Vector3d>, 2> confidence_loss_points_gradient(
    const PairPrediction& pred, const GtPair& gt, const LossConfig& cfg) {
  const LossReport report = regression_report(
      pred.view1.points, pred.view2.points, gt.view1, gt.view2);
  (void)cfg;  // alpha only touches the confidence term, constant in X

  const Pointmap* preds[2] = {&pred.view1.points, &pred.view2.points};
  const Pointmap* gts[2] = {&gt.view1, &gt.view2};
  const ConfidenceMap* confs[2] = {&pred.view1.confidence,
                                   &pred.view2.confidence};

  const double z = report.norm_pred;
  std::int64_t count = 0;
  for (int v = 0; v < 2; ++v) {
    for (std::uint8_t m : report.counted[v]) count += m != 0;
  }

  // d total / d X_j splits into the direct term c_j * n_j / z and the
  // normalization coupling -S * X_j / (count * |X_j| * z^2) with
  // S = sum_i c_i <n_i, X_i> and n_i the unit residual direction.
  std::array<std::vector<Eigen::Vector3d>, 2> grad;
  std::array<std::vector<Eigen::Vector3d>, 2> unit_residual;
  double coupling = 0.0;
  for (int v = 0; v < 2; ++v) {
    grad[v].assign(preds[v]->points.size(), Eigen::Vector3d::Zero());
    unit_residual[v].assign(preds[v]->points.size(), Eigen::Vector3d::Zero());
    for (std::size_t k = 0; k < report.counted[v].size(); ++k) {
      if (!report.counted[v][k]) continue;
      const double l = report.per_pixel[v][k];
      if (l <= 0.0) continue;  // subgradient 0 at an exact match
      const Eigen::Vector3d n =
          (preds[v]->points[k] / z - gts[v]->points[k] / report.norm_gt) / l;
      unit_residual[v][k] = n;
      coupling += confs[v]->weight[k] * n.dot(preds[v]->points[k]);
    }
  }

  for (int v = 0; v < 2; ++v) {
    for (std::size_t k = 0; k < report.counted[v].size(); ++k) {
      if (!report.counted[v][k]) continue;
      Eigen::Vector3d g = confs[v]->weight[k] * unit_residual[v][k] / z;
      const double point_norm = preds[v]->points[k].norm();
      if (point_norm > 0.0) {
        g -= coupling * preds[v]->points[k] /
             (static_cast<double>(count) * point_norm * z * z);
      }
      grad[v][k] = g;
    }
  }
  return grad;
}

ConfidenceMap confidence_activation(const std::vector<double>& raw,
                                    ImageSize size) {
  if (static_cast<std::int64_t>(raw.size()) != size.pixels()) {
    throw Error("precondition", "raw grid does not match the image size");
  }
  ConfidenceMap out(size);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    out.weight[k] = 1.0 + std::exp(std::min(raw[k], 80.0));
  }
  return out;
}

}  // namespace pmap3d
