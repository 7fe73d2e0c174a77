#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ssrl/autodiff.hpp"
#include "ssrl/tensor.hpp"

namespace ssrl {

enum class LayerKind { Conv, Relu };

struct Layer {
  LayerKind kind = LayerKind::Conv;
  std::size_t out_channels = 0;  // conv only; kernel 3x3, zero padding 1
  bool operator==(const Layer&) const = default;
};

/// DnCNN-style stack: conv-relu, (conv-relu) x (depth - 2), conv.
std::vector<Layer> dncnn_layers(std::size_t image_channels, std::size_t depth, std::size_t features);

/// Small convolutional denoiser f. Parameters are stored as (weight, bias)
/// pairs per conv layer, weight shaped [out, in, 3, 3].
class Network {
public:
  Network() = default;
  Network(std::size_t in_channels, std::vector<Layer> layers, bool residual);

  /// Kaiming-uniform fan-in weights, zero biases; the final conv of a
  /// residual network starts at zero so the network is the identity map.
  static Network initialized(std::size_t in_channels, std::vector<Layer> layers, bool residual, std::uint64_t seed);

  std::size_t in_channels() const { return in_channels_; }
  bool residual() const { return residual_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::vector<Tensor>& params() { return params_; }
  const std::vector<Tensor>& params() const { return params_; }
  std::size_t parameter_count() const;

  /// Registers every parameter as a gradient leaf on the tape.
  std::vector<Var> bind(Tape& tape) const;
  Var forward(Tape& tape, Var x, const std::vector<Var>& bound) const;

  /// Tape-free forward pass.
  Tensor infer(const Tensor& x) const;

  bool operator==(const Network&) const;

private:
  void check_input(const Shape& s) const;

  std::size_t in_channels_ = 1;
  std::vector<Layer> layers_;
  bool residual_ = false;
  std::vector<Tensor> params_;
};

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double decay_factor = 1.0;
  std::size_t decay_every = 0;  // epochs; 0 disables decay
};

struct AdamState {
  AdamConfig config;
  std::size_t step = 0;
  double lr = 0.0;
  std::vector<Tensor> m, v;

  AdamState(const AdamConfig& cfg, const Network& net);
  /// lr = lr0 * decay_factor^(epoch / decay_every).
  void set_epoch(std::size_t epoch);
};

/// Bias-corrected Adam update. Throws NumericalError on a non-finite gradient.
void adam_step(Network& net, const std::vector<Tensor>& grads, AdamState& state);

/// Directory checkpoint: manifest.txt plus one F32R file per tensor. `meta`
/// carries free-form key/value pairs (normalization, setup, ...).
void save_checkpoint(const std::filesystem::path& dir, const Network& net,
                     const std::map<std::string, std::string>& meta = {});
Network load_checkpoint(const std::filesystem::path& dir, std::map<std::string, std::string>* meta = nullptr);

}  // namespace ssrl
