#pragma once

#include <torch/torch.h>

#include "pivotae/arch.hpp"

namespace pivotae {

enum class FeatureRole { EncoderOutput, Pivot, BridgeReconstruction };

/// Batch of images, (B, C, H, W), values in [-1, 1].
struct ImageBatch {
  torch::Tensor data;

  /// Validates finiteness and value range before wrapping.
  static ImageBatch ingest(torch::Tensor t);

  int64_t batch() const { return data.size(0); }
};

/// Spatial grid of representation vectors, (B, h, w, D).
struct RepFeature {
  torch::Tensor data;
  FeatureRole role = FeatureRole::EncoderOutput;
};

/// Diagonal Gaussian posterior, mu and log_var each (B, h, w, d).
struct GaussianPosterior {
  torch::Tensor mu;
  torch::Tensor log_var;
};

/// Sampled latent, (B, h, w, d).
struct LatentCode {
  torch::Tensor data;
};

inline ImageBatch ImageBatch::ingest(torch::Tensor t) {
  check_arg(t.dim() == 4, "ImageBatch: expected 4-d tensor (B,C,H,W)");
  check_arg(torch::isfinite(t).all().item<bool>(), "ImageBatch: non-finite values");
  const double lo = t.min().item<double>();
  const double hi = t.max().item<double>();
  check_arg(lo >= -1.0 - 1e-6 && hi <= 1.0 + 1e-6, "ImageBatch: values outside [-1, 1]");
  return ImageBatch{std::move(t)};
}

}  // namespace pivotae
