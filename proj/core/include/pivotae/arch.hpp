#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "pivotae/common.hpp"

namespace pivotae {

/// Dimensions of the five-network pipeline. The default is the desk-scale
/// preset; paper_scale() gives the reference configuration.
struct ArchConfig {
  int64_t image_size = 64;
  int64_t channels = 3;
  int64_t patch_size = 8;
  int64_t rep_dim = 192;   // D, feature width of the representation encoder
  int64_t latent_dim = 16; // d, bridge bottleneck width

  int64_t encoder_layers = 4;
  int64_t bridge_enc_layers = 1;
  int64_t bridge_dec_layers = 2;
  int64_t decoder_layers = 4;

  int64_t encoder_heads = 4;
  int64_t decoder_heads = 4;
  int64_t bridge_heads = 4;
  int64_t decoder_hidden = 192;
  int64_t bridge_hidden = 192;

  int64_t disc_layers = 2;
  int64_t disc_hidden = 96;
  int64_t disc_heads = 4;

  double log_var_clamp = 10.0;  // log-variance clamped to [-clamp, clamp]

  int64_t grid() const { return image_size / patch_size; }
  int64_t tokens() const { return grid() * grid(); }

  void validate() const;

  /// Reference configuration: 256px images, p=16, D=768, d=64,
  /// encoder 12 layers, bridge 1/6, decoder 24 layers at width 1536.
  static ArchConfig paper_scale();

  /// Order-stable hash of every field; stored in checkpoints so a load onto a
  /// different architecture is refused.
  uint64_t hash() const;

  bool operator==(const ArchConfig&) const = default;
};

/// Optimizer and schedule settings shared by all stages.
struct OptimConfig {
  double peak_lr = 2e-4;
  double final_lr = 2e-5;
  double warmup_epochs = 1.0;
  double beta1 = 0.9;
  double beta2 = 0.95;
  double weight_decay = 1e-4;
  int64_t batch_size = 8;
  double grad_clip = 1.0;
  int64_t accumulate = 1;  // gradient accumulation factor

  void validate() const;
  bool operator==(const OptimConfig&) const = default;
};

/// Static loss weights for one stage. Adaptive factors (lambda_piv,
/// lambda_gan) are computed per step on top of these.
struct LossWeights {
  double w_rec = 1.0;
  double w_piv = 0.0;
  double w_gan = 0.0;
  double w_perc = 0.0;
  double w_feat = 0.0;
  double w_kl = 0.0;

  bool operator==(const LossWeights&) const = default;
};

/// Bounds for the gradient-ratio clip rule.
struct ClipBounds {
  double lambda_min = 0.0;
  double lambda_max = 1e4;
  double epsilon = 1e-6;

  void validate() const;
  bool operator==(const ClipBounds&) const = default;
};

enum class StageId { I, II, III, Single };

std::string to_string(StageId s);
StageId stage_from_string(const std::string& s);

enum class Subnet { Encoder, Decoder, BridgeEncoder, BridgeDecoder, Discriminator };

std::string to_string(Subnet s);

enum class PivotVariant { RawL2, NormalizedL2 };

std::string to_string(PivotVariant v);
PivotVariant pivot_variant_from_string(const std::string& s);

/// Which encoder parameters the pivot-weight gradient norms are probed on.
enum class GradProbeSet { LastEncoderBlock, FullEncoder };

std::string to_string(GradProbeSet s);
GradProbeSet probe_set_from_string(const std::string& s);

/// Declarative description of one training stage.
struct StagePlan {
  StageId stage = StageId::I;
  std::set<Subnet> trainable;
  LossWeights weights;
  int64_t epochs = 16;
  int64_t max_steps = 0;  // 0 = bounded by epochs only
  double noise_sigma = 0.0;
  bool bridge_active = false;

  PivotVariant pivot_variant = PivotVariant::RawL2;
  bool adaptive_pivot = true;
  bool adaptive_gan = true;
  ClipBounds pivot_bounds{};
  ClipBounds gan_bounds{};
  GradProbeSet probe_set = GradProbeSet::LastEncoderBlock;

  bool uses_gan() const { return weights.w_gan > 0.0; }
  bool uses_pivot() const { return weights.w_piv > 0.0; }
};

}  // namespace pivotae
