#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ssrl/autodiff.hpp"
#include "ssrl/masking.hpp"
#include "ssrl/network.hpp"
#include "ssrl/normalize.hpp"
#include "ssrl/pseudo.hpp"

namespace ssrl {

enum class SetupKind {
  Noise2True,
  Noise2Self,
  SsrlNoise2Self,
  Noise2Same,
  SsrlNoise2Same,
  Noise2Inverse,
  SsrlNoise2Inverse,
  Neighbor2Neighbor,
  SsrlNeighbor2Neighbor,
};

std::string_view to_string(SetupKind k);
SetupKind parse_setup_kind(std::string_view s);

enum class Restrict { None, OnJ, OnJc };
// Whether the restriction covers both terms of the sigma-balanced loss or
// only its second (invariance) term.
enum class RestrictScope { BothTerms, SecondTerm };

std::string_view to_string(Restrict r);
Restrict parse_restrict(std::string_view s);

struct LearningSetup {
  SetupKind kind = SetupKind::Noise2Self;
  std::optional<MaskScheme> mask;
  std::optional<PseudoPredictor> g;
  double sigma = 0.0;
  Restrict restrict = Restrict::None;
  RestrictScope scope = RestrictScope::BothTerms;
  FillScheme fill = FillScheme::Avg4;
  Normalization normalization = Normalization::Raw;

  bool needs_mask() const;
  bool needs_g() const;
  void validate() const;
};

/// One tape holding the network's parameters as leaves.
class LossGraph {
public:
  explicit LossGraph(const Network& net);

  Tape& tape() { return tape_; }
  const Network& net() const { return net_; }
  Var f(const Tensor& x);
  void backward(Var loss) { tape_.backward(loss); }
  /// Parameter gradients after backward().
  std::vector<Tensor> gradients();

private:
  const Network& net_;
  Tape tape_;
  std::vector<Var> params_;
};

// Every loss is a per-sample mean: squared errors are divided by the number of
// (restricted) samples per image and by the batch size. Network inputs and
// targets are mapped by the normalization of the noisy input image.

Var loss_supervised(LossGraph& graph, std::span<const Image> x, std::span<const Image> y, Normalization norm);

/// Sum over the chosen subsets J of ||f(x_Jc) - g(x_J)||^2 on the restricted
/// pixels. `subsets` empty means every subset of the partition.
Var loss_ssrl_ind(LossGraph& graph, const PseudoPredictor& g, std::span<const Image> x, const Partition& partition,
                  std::span<const std::size_t> subsets, Restrict restrict, FillScheme fill, Normalization norm);

/// ||f(x) - g(x_J)||^2 + 2 sigma sqrt(||f(x) - f(x_Jc)||^2), both as batch
/// means over the restricted pixels. An identity g takes x itself as target.
Var loss_ssrl_noJ(LossGraph& graph, const PseudoPredictor& g, std::span<const Image> x, const Partition& partition,
                  std::span<const std::size_t> subsets, double sigma, Restrict restrict, RestrictScope scope,
                  FillScheme fill, Normalization norm);

/// ||f(a) - b||^2 averaged over both orderings of each pair.
Var loss_noise2inverse(LossGraph& graph, std::span<const Image> a, std::span<const Image> b, Normalization norm);

/// ||f(a)/2 - (b - g(b)/2)||^2, symmetrized; g is a trained Noise2Inverse model.
Var loss_ssrl_noise2inverse(LossGraph& graph, const PseudoPredictor& g_pre, std::span<const Image> a,
                            std::span<const Image> b, Normalization norm);

/// ||f(g1) - g(g2)||^2 over neighbor sub-sampled halves; seeds[i] drives image i.
Var loss_neighbor2neighbor(LossGraph& graph, const PseudoPredictor& g, std::span<const Image> x,
                           std::span<const std::uint64_t> seeds, Normalization norm);

}  // namespace ssrl
