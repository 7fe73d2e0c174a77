#pragma once

#include <cstddef>
#include <filesystem>
#include <utility>
#include <vector>

#include "ssrl/image.hpp"
#include "ssrl/rng.hpp"

namespace ssrl {

/// Linear attenuation of water; HU maps to mu = HU / 1000 * kMuWater.
inline constexpr double kMuWaterPerMm = 0.02;

/// Parallel-beam geometry. The image is square and centered on the rotation
/// axis; detector k sits at t = (k - (n_detectors - 1) / 2) * detector_pitch.
struct Geometry {
  std::size_t image_size = 64;
  double pixel_pitch_mm = 1.0;
  std::vector<double> angles;  // radians
  std::size_t n_detectors = 0;
  double detector_pitch_mm = 1.0;

  std::size_t n_views() const { return angles.size(); }
  void validate() const;
};

/// n_views equi-spaced angles over [0, pi); `bins_per_pixel` detector bins
/// per pixel width and the smallest odd detector count spanning the image
/// diagonal. Two bins per pixel roughly halves the edge blur of FBP(A y).
Geometry parallel_geometry(std::size_t image_size, double pixel_pitch_mm, std::size_t n_views,
                           std::size_t bins_per_pixel = 2);

enum class SinogramDomain { LineIntegral, PostLog };

class Sinogram {
public:
  Sinogram(Geometry geom, SinogramDomain domain);

  const Geometry& geometry() const { return geom_; }
  SinogramDomain domain() const { return domain_; }
  std::size_t n_views() const { return geom_.n_views(); }
  std::size_t n_detectors() const { return geom_.n_detectors; }

  double& at(std::size_t view, std::size_t det) { return values_[view * geom_.n_detectors + det]; }
  double at(std::size_t view, std::size_t det) const { return values_[view * geom_.n_detectors + det]; }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

private:
  Geometry geom_;
  SinogramDomain domain_;
  std::vector<double> values_;  // view-major
};

struct CtNoiseParams {
  double rho0 = 5e4;  // incident photons per ray
};

/// Joseph-style projection: steps along the axis most aligned with each ray
/// and interpolates linearly across the other. HU images are converted to
/// attenuation first; the result is in line-integral units (dimensionless).
Sinogram radon_forward(const Image& y, const Geometry& geom);

/// Ramp-filtered back-projection; returns an HU image.
Image fbp(const Sinogram& z, const Geometry& geom);

/// Poisson counts rho0 * exp(-z) per ray, zero counts floored to one, then
/// post-log -log(counts / rho0).
Sinogram corrupt_sinogram(const Sinogram& clean, const CtNoiseParams& params, RngStream& rng);

/// (odd views, even views), each with its own half geometry.
std::pair<Sinogram, Sinogram> split_views(const Sinogram& z);

/// Inverse of split_views.
Sinogram interleave_views(const Sinogram& odd, const Sinogram& even);

struct CtSample {
  Image x;  // noisy FBP
  Image e;  // x - y
};

CtSample ct_noise_sample(const Image& y, const Geometry& geom, const CtNoiseParams& params, RngStream& rng);

/// F32R payload (views x detectors) plus a "<path>.geom" text sidecar.
void save_sinogram(const Sinogram& z, const std::filesystem::path& path);
Sinogram load_sinogram(const std::filesystem::path& path);

}  // namespace ssrl
