#pragma once

#include <torch/torch.h>

#include <vector>

#include "pivotae/arch.hpp"

namespace pivotae {

/// Pre-LayerNorm transformer block over (B, T, C) token sequences.
struct TransformerBlockImpl : torch::nn::Module {
  TransformerBlockImpl(int64_t dim, int64_t heads, int64_t mlp_ratio = 4);
  torch::Tensor forward(torch::Tensor x);

  torch::nn::LayerNorm ln1{nullptr}, ln2{nullptr};
  torch::nn::Linear qkv{nullptr}, proj{nullptr}, fc1{nullptr}, fc2{nullptr};
  int64_t heads_;
};
TORCH_MODULE(TransformerBlock);

/// Conv patchifier: (B, C, H, W) -> (B, T, dim) with T = (H/p)*(W/p).
struct PatchEmbedImpl : torch::nn::Module {
  PatchEmbedImpl(int64_t channels, int64_t patch, int64_t dim);
  torch::Tensor forward(const torch::Tensor& x);

  torch::nn::Conv2d proj{nullptr};
};
TORCH_MODULE(PatchEmbed);

/// Image -> representation grid (B, h, w, D). Learned positional embeddings,
/// final LayerNorm.
struct VitEncoderImpl : torch::nn::Module {
  explicit VitEncoderImpl(const ArchConfig& cfg);
  torch::Tensor forward(const torch::Tensor& x);  // (B,C,H,W) -> (B,h,w,D)

  PatchEmbed patch{nullptr};
  torch::Tensor pos;
  torch::nn::ModuleList blocks;
  torch::nn::LayerNorm norm{nullptr};
  int64_t grid_;
};
TORCH_MODULE(VitEncoder);

/// Representation grid -> diagonal Gaussian parameters, each (B, h, w, d).
struct BridgeEncoderImpl : torch::nn::Module {
  explicit BridgeEncoderImpl(const ArchConfig& cfg);
  std::pair<torch::Tensor, torch::Tensor> forward(const torch::Tensor& f);

  torch::nn::Linear embed{nullptr}, head{nullptr};
  torch::Tensor pos;
  torch::nn::ModuleList blocks;
  torch::nn::LayerNorm norm{nullptr};
  int64_t latent_dim_;
  double log_var_clamp_;
};
TORCH_MODULE(BridgeEncoder);

/// Latent grid (B, h, w, d) -> representation grid (B, h, w, D).
struct BridgeDecoderImpl : torch::nn::Module {
  explicit BridgeDecoderImpl(const ArchConfig& cfg);
  torch::Tensor forward(const torch::Tensor& z);

  torch::nn::Linear embed{nullptr}, head{nullptr};
  torch::Tensor pos;
  torch::nn::ModuleList blocks;
  torch::nn::LayerNorm norm{nullptr};
};
TORCH_MODULE(BridgeDecoder);

/// Representation grid -> image, tanh-bounded into [-1, 1].
struct PixelDecoderImpl : torch::nn::Module {
  explicit PixelDecoderImpl(const ArchConfig& cfg);
  torch::Tensor forward(const torch::Tensor& f);  // (B,h,w,D) -> (B,C,H,W)

  torch::nn::Linear embed{nullptr}, head{nullptr};
  torch::Tensor pos;
  torch::nn::ModuleList blocks;
  torch::nn::LayerNorm norm{nullptr};
  int64_t patch_, channels_, grid_;
};
TORCH_MODULE(PixelDecoder);

/// Patchwise transformer critic: (B, C, H, W) -> per-patch scores (B, T).
struct PatchDiscriminatorImpl : torch::nn::Module {
  explicit PatchDiscriminatorImpl(const ArchConfig& cfg);
  torch::Tensor forward(const torch::Tensor& x);

  PatchEmbed patch{nullptr};
  torch::Tensor pos;
  torch::nn::ModuleList blocks;
  torch::nn::LayerNorm norm{nullptr};
  torch::nn::Linear head{nullptr};
};
TORCH_MODULE(PatchDiscriminator);

/// Small fixed convolutional extractor for the perceptual distance. Built
/// once from a constant seed and never trained.
struct ConvFeatureNetImpl : torch::nn::Module {
  explicit ConvFeatureNetImpl(int64_t channels);
  std::vector<torch::Tensor> forward(const torch::Tensor& x);

  torch::nn::Conv2d c1{nullptr}, c2{nullptr}, c3{nullptr};
};
TORCH_MODULE(ConvFeatureNet);

/// Deterministic construction of the frozen perceptual extractor. The seed is
/// a fixed constant so distances are comparable across runs and seeds.
ConvFeatureNet make_perceptual_net(int64_t channels);

}  // namespace pivotae
