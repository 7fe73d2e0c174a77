#pragma once

#include <cstdint>

#include "ssrl/image.hpp"
#include "ssrl/rng.hpp"

namespace ssrl {

struct MixedNoiseParams {
  double lambda = 30.0;     // Poisson gain, photons per intensity unit
  double sigma_eps = 60.0;  // read-noise std in 8-bit units
  double p = 0.2;           // salt-and-pepper substitution probability
  void validate() const;
};

/// Means below this use Knuth's multiplication method, above it PTRS.
inline constexpr double kPoissonPtrsThreshold = 30.0;

/// Exact Poisson draw: Knuth for small means, Hormann's transformed
/// rejection with squeeze (PTRS) otherwise.
std::uint64_t sample_poisson(double mean, RngStream& rng);

/// Photon noise, read noise, salt-and-pepper substitution, then 8-bit
/// quantization (round half away from zero) and clipping, in that order.
/// Substitution is decided per channel.
Image corrupt_mixed(const Image& y, const MixedNoiseParams& params, RngStream& rng);

/// One sample before quantization and clipping; corrupt_mixed draws exactly
/// this per channel.
double mixed_noise_unquantized(double y, const MixedNoiseParams& params, RngStream& rng);

Image add_gaussian(const Image& y, double sigma, RngStream& rng);

}  // namespace ssrl
