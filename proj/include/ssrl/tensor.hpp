#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ssrl/image.hpp"

namespace ssrl {

struct Shape {
  std::size_t n = 1, c = 1, h = 1, w = 1;
  std::size_t numel() const { return n * c * h * w; }
  std::size_t per_sample() const { return c * h * w; }
  bool operator==(const Shape&) const = default;
};

/// Dense NCHW block of 64-bit floats.
struct Tensor {
  Shape shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(Shape s, double fill = 0.0) : shape(s), data(s.numel(), fill) {}
  Tensor(Shape s, std::vector<double> values);

  std::size_t numel() const { return data.size(); }
  std::span<double> sample(std::size_t i) { return {data.data() + i * shape.per_sample(), shape.per_sample()}; }
  std::span<const double> sample(std::size_t i) const {
    return {data.data() + i * shape.per_sample(), shape.per_sample()};
  }
};

/// Stacks same-shaped images into an N x C x H x W tensor.
Tensor to_tensor(std::span<const Image> images);
Tensor to_tensor(const Image& image);

/// Sample i of `t` as an image with the given unit.
Image to_image(const Tensor& t, std::size_t i, Unit unit);

}  // namespace ssrl
