#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ssrl {

enum class Unit { Hu, EightBit, UnitInterval };

std::string_view to_string(Unit u);
Unit parse_unit(std::string_view s);

struct ValueRange {
  double lo = 0.0;
  double hi = 1.0;
  double width() const { return hi - lo; }
  bool operator==(const ValueRange&) const = default;
};

/// Declared range for a unit. HU images use the phantom range [0, 1600].
ValueRange default_range(Unit u);

/// Dense 2-D raster, row-major and channel-interleaved: sample (r, c, ch) lives
/// at (r * width + c) * channels + ch.
class Image {
public:
  Image() = default;
  Image(std::size_t height, std::size_t width, std::size_t channels, Unit unit);
  Image(std::size_t height, std::size_t width, std::size_t channels, Unit unit,
        std::vector<double> samples);

  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  std::size_t channels() const { return channels_; }
  std::size_t pixels() const { return height_ * width_; }
  std::size_t size() const { return samples_.size(); }
  Unit unit() const { return unit_; }
  const ValueRange& range() const { return range_; }

  /// Only HU images may carry a non-default range.
  void set_range(ValueRange r);

  double& at(std::size_t r, std::size_t c, std::size_t ch = 0) {
    return samples_[(r * width_ + c) * channels_ + ch];
  }
  double at(std::size_t r, std::size_t c, std::size_t ch = 0) const {
    return samples_[(r * width_ + c) * channels_ + ch];
  }

  std::span<double> samples() { return samples_; }
  std::span<const double> samples() const { return samples_; }
  std::vector<double>& buffer() { return samples_; }

  bool same_shape(const Image& other) const {
    return height_ == other.height_ && width_ == other.width_ && channels_ == other.channels_;
  }
  bool all_finite() const;

  /// Same shape and unit, samples copied from `values`.
  Image with_samples(std::vector<double> values) const;

  bool operator==(const Image& other) const = default;

private:
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::size_t channels_ = 1;
  Unit unit_ = Unit::UnitInterval;
  ValueRange range_ = default_range(Unit::UnitInterval);
  std::vector<double> samples_;
};

enum class DatasetKind { CtPhantom, CameraTexture };

struct DatasetSpec {
  DatasetKind kind = DatasetKind::CtPhantom;
  std::size_t count = 1;
  std::size_t size = 64;
  std::uint64_t seed = 0;
  double edge_blur_px = 1.5;  // phantoms only: Gaussian std of the edge profile, 0 keeps hard edges
};

/// Grayscale HU phantom: body oval of water-like tissue with 4-10 random
/// ellipses inside, 3x3 supersampled, then Gaussian-blurred so edges have
/// a finite width. Values in [0, 1600].
Image generate_phantom(const DatasetSpec& spec, std::size_t index);

/// RGB texture in [0, 255]: smooth gradients, geometric shapes and a
/// band-limited sinusoidal texture.
Image generate_texture(const DatasetSpec& spec, std::size_t index);

Image generate(const DatasetSpec& spec, std::size_t index);

/// Format chosen by extension: .f32r, .pgm, .ppm. PGM/PPM map the declared
/// range linearly onto 0..255 with rounding and clipping.
void save_raster(const Image& image, const std::filesystem::path& path);

/// F32R files carry no unit; `float_unit` is assigned to them. PGM/PPM
/// always load as EightBit.
Image load_raster(const std::filesystem::path& path, Unit float_unit = Unit::Hu);

}  // namespace ssrl
