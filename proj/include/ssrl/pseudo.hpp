#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ssrl/image.hpp"
#include "ssrl/masking.hpp"
#include "ssrl/network.hpp"
#include "ssrl/normalize.hpp"

namespace ssrl {

enum class PseudoKind { Identity, WeightedMedian, MeanShift, Network };
enum class MedianTrigger { All, ExtremesOnly };

struct WeightedMedianParams {
  // Row-major 3x3 weights; the default is the impulse-oriented center-heavy kernel.
  std::array<double, 9> weights{1, 2, 1, 2, 9, 2, 1, 2, 1};
  std::size_t dilation = 1;
  MedianTrigger trigger = MedianTrigger::ExtremesOnly;
};

/// A trained network used as a fixed target generator, with the
/// normalization it was trained under.
struct NetworkPseudo {
  std::shared_ptr<const Network> model;
  Normalization normalization = Normalization::Raw;
};

struct PseudoPredictor {
  PseudoKind kind = PseudoKind::Identity;
  WeightedMedianParams median;
  double bias = 0.0;              // MEAN_SHIFT scalar
  std::optional<Image> bias_map;  // MEAN_SHIFT per-sample, overrides `bias`
  NetworkPseudo network;

  static PseudoPredictor identity();
  static PseudoPredictor weighted_median(WeightedMedianParams p = {});
  static PseudoPredictor mean_shift(double bias);
  static PseudoPredictor mean_shift(Image bias);
  static PseudoPredictor wrap(std::shared_ptr<const Network> model, Normalization n);

  void validate() const;
};

/// Lower weighted median: smallest value whose cumulative weight reaches half
/// the total.
double weighted_median(std::span<const double> values, std::span<const double> weights);

Image apply_pseudo(const PseudoPredictor& g, const Image& x);

/// g evaluated on x_J only: the complement of J is filled by interpolation
/// before g runs.
Image apply_pseudo_on(const PseudoPredictor& g, const Image& x, const PixelSet& J, FillScheme fill);

enum class MeasureScheme { Noise2Self, Neighbor2Neighbor };

/// Self-supervised proxy for how well g predicts the hidden half of the data.
/// Squared image units per sample.
double empirical_g_measure(const PseudoPredictor& g, std::span<const Image> dataset, MeasureScheme scheme,
                           const std::optional<MaskScheme>& mask, FillScheme fill, std::uint64_t seed);

struct ConditionalDeviation {
  Image map;  // per-sample mean of g(x) - y
  double average_abs = 0.0;
};

/// Sample estimate of E[g(x) - y | y] from repeated noise draws of one y.
ConditionalDeviation conditional_deviation(const PseudoPredictor& g, std::span<const Image> draws, const Image& y);

}  // namespace ssrl
