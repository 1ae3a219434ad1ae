#pragma once

#include <array>

#include "pmap3d/types.h"

namespace pmap3d {

struct LossConfig {
  // Weight of the -log(confidence) regularizer.
  double alpha = 0.2;
};

// Result of evaluating a loss kernel on a pair. per_pixel holds the plain
// per-pixel regression terms (before any confidence weighting); counted
// marks which pixels entered the sums. norm_pred / norm_gt are the scale
// normalization factors of the two pairs.
struct LossReport {
  ImageSize size;
  double total = 0.0;
  std::array<std::vector<double>, 2> per_pixel;
  std::array<std::vector<std::uint8_t>, 2> counted;
  double norm_pred = 0.0;
  double norm_gt = 0.0;
};

// Average distance of all valid points to the origin, pooled over both maps:
// sum(|X|) / (|D1| + |D2|). One map may be empty; both empty is an error
// ("empty_normalization_set").
double norm_factor(const Pointmap& pm1, const Pointmap& pm2);

// Scale-normalized per-pixel regression terms |X/z - Xgt/zgt| where z and
// zgt normalize the predicted and ground-truth pairs independently. Pixels
// invalid in the ground truth (or in the prediction) are excluded; the
// normalization factors are computed over exactly the counted pixels.
// total is the unweighted sum of the per-pixel terms.
LossReport regression_loss(const Pointmap& pred1, const Pointmap& pred2,
                           const Pointmap& gt1, const Pointmap& gt2);

// Confidence-weighted objective: sum over counted pixels of
// C * l_regr - alpha * log(C). Confidences must be strictly positive.
LossReport confidence_loss(const PairPrediction& pred, const GtPair& gt,
                           const LossConfig& cfg);

// Analytic gradient of confidence_loss' total with respect to every
// predicted point, including the chain through the normalization factor.
// Exists to serve global alignment and gradient verification.
std::array<std::vector<Eigen::Vector3d>, 2> confidence_loss_points_gradient(
    const PairPrediction& pred, const GtPair& gt, const LossConfig& cfg);

// Maps raw scores to strictly positive weights 1 + exp(raw). The exponent is
// clamped at 80, where the result is already saturated for downstream use.
ConfidenceMap confidence_activation(const std::vector<double>& raw,
                                    ImageSize size);

}  // namespace pmap3d
