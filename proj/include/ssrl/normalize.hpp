#pragma once

#include <string_view>

#include "ssrl/image.hpp"
#include "ssrl/tensor.hpp"

namespace ssrl {

enum class Normalization { Raw, Rescale01, StandardizePerImage };

std::string_view to_string(Normalization n);
Normalization parse_normalization(std::string_view s);

/// v_net = (v - offset) / scale.
struct Affine {
  double offset = 0.0;
  double scale = 1.0;
  double forward(double v) const { return (v - offset) / scale; }
  double inverse(double v) const { return v * scale + offset; }
};

/// Rescale01 maps the declared range onto [0, 1]; StandardizePerImage uses
/// the image's own mean and std (std floored at 1e-8 of the range width).
Affine normalization_for(Normalization n, const Image& x);

/// Stacks images into network space, sample i mapped by maps[i].
Tensor to_network(std::span<const Image> images, std::span<const Affine> maps);
/// Sample i of a network-space tensor back in the units of `like`.
Image from_network(const Tensor& t, std::size_t i, const Affine& map, const Image& like);

}  // namespace ssrl
