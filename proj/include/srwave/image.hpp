#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace srwave {

/// One channel of double-precision samples, row-major.
///
/// Samples are unbounded and signed so the same type carries intensities,
/// wavelet coefficients and back-projection error planes. Clamping only
/// happens when an image is quantized for output.
class ImagePlane {
 public:
  ImagePlane() = default;
  ImagePlane(int width, int height, double fill = 0.0);
  ImagePlane(int width, int height, std::vector<double> samples);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

  double operator()(int x, int y) const noexcept {
    return samples_[static_cast<std::size_t>(y) * width_ + x];
  }
  double& operator()(int x, int y) noexcept {
    return samples_[static_cast<std::size_t>(y) * width_ + x];
  }

  // Periodic and edge-replicating accessors used by the filter banks.
  double wrapped(int x, int y) const noexcept;
  double clamped(int x, int y) const noexcept;

  std::span<const double> samples() const& noexcept { return samples_; }
  std::span<double> samples() & noexcept { return samples_; }
  // Rvalue planes hand over their storage so `for (v : f().samples())` is safe.
  std::vector<double> samples() && noexcept { return std::move(samples_); }
  std::span<const double> row(int y) const noexcept {
    return {samples_.data() + static_cast<std::size_t>(y) * width_,
            static_cast<std::size_t>(width_)};
  }
  std::span<double> row(int y) noexcept {
    return {samples_.data() + static_cast<std::size_t>(y) * width_,
            static_cast<std::size_t>(width_)};
  }

  bool same_shape(const ImagePlane& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const ImagePlane&, const ImagePlane&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> samples_;
};

/// A grayscale (1 plane) or RGB (3 planes) image.
class Image {
 public:
  static constexpr int kMaxValue = 255;

  Image() = default;
  explicit Image(std::vector<ImagePlane> planes, int max_value = kMaxValue);

  int width() const noexcept { return planes_.empty() ? 0 : planes_[0].width(); }
  int height() const noexcept { return planes_.empty() ? 0 : planes_[0].height(); }
  int channels() const noexcept { return static_cast<int>(planes_.size()); }
  int max_value() const noexcept { return max_value_; }

  const ImagePlane& plane(int c) const { return planes_.at(c); }
  ImagePlane& plane(int c) { return planes_.at(c); }
  const std::vector<ImagePlane>& planes() const noexcept { return planes_; }

  bool same_shape(const Image& other) const noexcept;

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::vector<ImagePlane> planes_;
  int max_value_ = kMaxValue;
};

// Elementwise arithmetic. None of these clamp.
ImagePlane plane_add(const ImagePlane& a, const ImagePlane& b);
ImagePlane plane_sub(const ImagePlane& a, const ImagePlane& b);
ImagePlane plane_scale(const ImagePlane& a, double factor);

/// Clamp to [0, max] and round half away from zero, one sample.
double quantize_sample(double v, int max_value = Image::kMaxValue) noexcept;

/// Clamp only (no rounding) to [0, max_value], per sample.
Image clamp(const Image& img);

/// What a viewer sees after save_pnm: clamped and rounded samples.
Image quantize(const Image& img);

/// Root mean square of all samples.
double rms(const ImagePlane& p) noexcept;

}  // namespace srwave
