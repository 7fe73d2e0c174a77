#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ssrl/image.hpp"
#include "ssrl/losses.hpp"
#include "ssrl/network.hpp"

namespace ssrl {

struct TrainConfig {
  std::size_t epochs = 30;
  std::size_t batch = 8;
  AdamConfig adam;
  std::uint64_t seed = 0;
  bool augment = false;        // random flips and quarter turns per sample
  std::size_t val_every = 1;   // epochs between validation passes; 0 = final only
};

/// Training inputs. `x` is always required; `y` only for noise2true; `a` and
/// `b` are the half-view reconstructions for the noise2inverse setups.
struct TrainSet {
  std::vector<Image> x, y, a, b;
  std::size_t size() const;
};

struct Validation {
  std::vector<Image> x, y;
};

struct TrainLogRow {
  std::size_t epoch = 0;
  std::size_t step = 0;
  double loss = 0.0;
  double lr = 0.0;
  std::optional<double> val_rmse_hu, val_psnr, val_ssim;
};

/// Inference rule: f on the full image, mapped by `normalization`; when
/// `partner` is set the result is averaged with partner(x).
struct Denoiser {
  std::shared_ptr<const Network> f;
  Normalization normalization = Normalization::Raw;
  std::optional<PseudoPredictor> partner;

  Image operator()(const Image& x) const;
  std::vector<Image> operator()(std::span<const Image> xs) const;
};

struct TrainResult {
  Network net;
  std::vector<TrainLogRow> log;
};

/// Dihedral transform k in [0, 8): k & 3 quarter turns, then a horizontal
/// flip when k & 4. Square images only for odd turns.
Image dihedral(const Image& x, int k);

/// Validation metrics of `d` on (x, y) pairs: rmse (HU only), psnr, ssim.
TrainLogRow evaluate(const Denoiser& d, const Validation& val);

/// Shuffled minibatch Adam on the setup's loss. Deterministic in cfg.seed.
/// Aborts with NumericalError when the loss stops being finite.
TrainResult train(const LearningSetup& setup, const Network& init, const TrainSet& data, const TrainConfig& cfg,
                  const Validation* val = nullptr);

/// The denoiser that goes with a trained setup.
Denoiser denoiser_for(const LearningSetup& setup, const Network& net);

}  // namespace ssrl
