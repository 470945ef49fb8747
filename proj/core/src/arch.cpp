#include "pivotae/arch.hpp"

#include <sstream>

namespace pivotae {

void ArchConfig::validate() const {
  check_config(image_size > 0 && channels > 0 && patch_size > 0, "arch: dimensions must be positive");
  check_config(image_size % patch_size == 0, "arch: image_size must be divisible by patch_size");
  check_config(rep_dim > 0 && latent_dim > 0, "arch: rep_dim and latent_dim must be positive");
  check_config(latent_dim < rep_dim, "arch: latent_dim must be smaller than rep_dim (the bridge compresses)");
  check_config(encoder_layers > 0 && decoder_layers > 0 && bridge_enc_layers > 0 && bridge_dec_layers > 0,
               "arch: layer counts must be positive");
  check_config(rep_dim % encoder_heads == 0, "arch: rep_dim must be divisible by encoder_heads");
  check_config(decoder_hidden % decoder_heads == 0, "arch: decoder_hidden must be divisible by decoder_heads");
  check_config(bridge_hidden % bridge_heads == 0, "arch: bridge_hidden must be divisible by bridge_heads");
  check_config(disc_hidden % disc_heads == 0, "arch: disc_hidden must be divisible by disc_heads");
  check_config(log_var_clamp > 0, "arch: log_var_clamp must be positive");
}

ArchConfig ArchConfig::paper_scale() {
  ArchConfig c;
  c.image_size = 256;
  c.channels = 3;
  c.patch_size = 16;
  c.rep_dim = 768;
  c.latent_dim = 64;
  c.encoder_layers = 12;
  c.bridge_enc_layers = 1;
  c.bridge_dec_layers = 6;
  c.decoder_layers = 24;
  c.encoder_heads = 12;
  c.decoder_heads = 24;
  c.bridge_heads = 8;
  c.decoder_hidden = 1536;
  c.bridge_hidden = 768;
  c.disc_layers = 12;
  c.disc_hidden = 384;
  c.disc_heads = 6;
  return c;
}

uint64_t ArchConfig::hash() const {
  std::ostringstream os;
  os << image_size << '|' << channels << '|' << patch_size << '|' << rep_dim << '|' << latent_dim << '|'
     << encoder_layers << '|' << bridge_enc_layers << '|' << bridge_dec_layers << '|' << decoder_layers << '|'
     << encoder_heads << '|' << decoder_heads << '|' << bridge_heads << '|' << decoder_hidden << '|'
     << bridge_hidden << '|' << disc_layers << '|' << disc_hidden << '|' << disc_heads << '|' << log_var_clamp;
  return fnv1a64(os.str());
}

void OptimConfig::validate() const {
  check_config(peak_lr > final_lr && final_lr > 0, "optim: require peak_lr > final_lr > 0");
  check_config(warmup_epochs >= 0, "optim: warmup_epochs must be nonnegative");
  check_config(batch_size > 0, "optim: batch_size must be positive");
  check_config(accumulate >= 1, "optim: accumulate must be >= 1");
  check_config(grad_clip >= 0, "optim: grad_clip must be nonnegative");
}

void ClipBounds::validate() const {
  check_config(lambda_min >= 0, "clip: lambda_min must be nonnegative");
  check_config(lambda_max > 0 && lambda_min <= lambda_max, "clip: require lambda_min <= lambda_max, lambda_max > 0");
  check_config(epsilon > 0, "clip: epsilon must be positive");
}

std::string to_string(StageId s) {
  switch (s) {
    case StageId::I: return "I";
    case StageId::II: return "II";
    case StageId::III: return "III";
    case StageId::Single: return "single";
  }
  return "?";
}

StageId stage_from_string(const std::string& s) {
  if (s == "I" || s == "1") return StageId::I;
  if (s == "II" || s == "2") return StageId::II;
  if (s == "III" || s == "3") return StageId::III;
  if (s == "single") return StageId::Single;
  throw ConfigError("unknown stage id: " + s);
}

std::string to_string(Subnet s) {
  switch (s) {
    case Subnet::Encoder: return "encoder";
    case Subnet::Decoder: return "decoder";
    case Subnet::BridgeEncoder: return "bridge_enc";
    case Subnet::BridgeDecoder: return "bridge_dec";
    case Subnet::Discriminator: return "disc";
  }
  return "?";
}

std::string to_string(PivotVariant v) {
  return v == PivotVariant::RawL2 ? "raw_l2" : "normalized_l2";
}

PivotVariant pivot_variant_from_string(const std::string& s) {
  if (s == "raw_l2") return PivotVariant::RawL2;
  if (s == "normalized_l2") return PivotVariant::NormalizedL2;
  throw ConfigError("unknown pivot variant: " + s);
}

std::string to_string(GradProbeSet s) {
  return s == GradProbeSet::LastEncoderBlock ? "last_block" : "full";
}

GradProbeSet probe_set_from_string(const std::string& s) {
  if (s == "last_block") return GradProbeSet::LastEncoderBlock;
  if (s == "full") return GradProbeSet::FullEncoder;
  throw ConfigError("unknown gradient probe set: " + s);
}

}  // namespace pivotae
