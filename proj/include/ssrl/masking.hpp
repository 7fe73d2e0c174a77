#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "ssrl/image.hpp"

namespace ssrl {

/// Sorted flat pixel indices (r * width + c).
using PixelSet = std::vector<std::size_t>;

/// Disjoint subsets J_1..J_B covering every pixel of a height x width image.
class Partition {
public:
  Partition(std::size_t height, std::size_t width, std::vector<PixelSet> subsets);

  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  std::size_t size() const { return subsets_.size(); }
  const PixelSet& operator[](std::size_t b) const { return subsets_[b]; }
  const std::vector<PixelSet>& subsets() const { return subsets_; }

  /// Everything outside subset b.
  PixelSet complement(std::size_t b) const;

private:
  std::size_t height_, width_;
  std::vector<PixelSet> subsets_;
};

enum class MaskKind { Checkerboard, GridDeterministic, GridStratifiedRandom };

struct MaskScheme {
  MaskKind kind = MaskKind::Checkerboard;
  std::size_t window = 4;
  std::uint64_t seed = 0;
};

enum class FillScheme { Avg4, Weighted8 };

Partition checkerboard_partition(std::size_t height, std::size_t width);

/// window^2 subsets. Deterministic: subset b takes offset (b / window,
/// b % window) of every window. Stratified: each window is permuted with the
/// seed and subset b takes the b-th pixel of each window's permutation.
/// Edge windows may be smaller, so later subsets can miss them.
Partition grid_partition(std::size_t height, std::size_t width, const MaskScheme& scheme);

Partition make_partition(std::size_t height, std::size_t width, const MaskScheme& scheme);

PixelSet complement(const PixelSet& set, std::size_t pixel_count);

/// Replaces every pixel in J by a neighbor average. Neighbors outside the
/// image are dropped; neighbors in J are ignored whenever some neighbor lies
/// outside J. Pixels outside J are copied unchanged.
Image fill_masked(const Image& x, const PixelSet& J, FillScheme scheme);

/// Two half-resolution images drawn from distinct pixels of every 2x2 window.
std::pair<Image, Image> neighbor_subsample(const Image& x, std::uint64_t seed);

/// 255 where the pixel is in J, 0 elsewhere.
Image mask_image(const PixelSet& J, std::size_t height, std::size_t width);

}  // namespace ssrl
