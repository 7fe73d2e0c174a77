#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ssrl/image.hpp"

namespace ssrl {

/// Returned by psnr() when the images are identical.
inline constexpr double kPsnrIdentical = std::numeric_limits<double>::infinity();

double mse(const Image& pred, const Image& ref);
double rmse_hu(const Image& pred, const Image& ref);
/// RMSE over the disk inscribed in the image (radius = frac * size / 2).
double rmse_hu_interior(const Image& pred, const Image& ref, double frac = 0.9);
double psnr(const Image& pred, const Image& ref, double peak);
/// Mean local SSIM, 11x11 Gaussian window (sigma 1.5) over valid positions,
/// channel-averaged. peak <= 0 takes the reference's declared range width.
double ssim(const Image& pred, const Image& ref, double peak = 0.0);

struct MetricSummary {
  std::string name;
  std::vector<double> values;
  double mean = 0.0;
  double std = 0.0;
};

MetricSummary summarize(std::string name, std::vector<double> values);

}  // namespace ssrl
