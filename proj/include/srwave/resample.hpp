#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "srwave/image.hpp"

namespace srwave {

/// Mitchell–Netravali cubic with support [-2, 2].
///
/// B = 0, C = 0.5 is Catmull-Rom (interpolating); B = C = 1/3 is Mitchell,
/// which is mildly low-pass. Any (B, C) gives weights that sum to one at
/// every phase.
struct CubicKernel {
  double b = 0.0;
  double c = 0.5;

  static constexpr double kSupport = 2.0;

  static constexpr CubicKernel catmull_rom() noexcept { return {0.0, 0.5}; }
  static constexpr CubicKernel mitchell() noexcept { return {1.0 / 3.0, 1.0 / 3.0}; }

  double operator()(double x) const noexcept;
};

enum class ResampleTag { standard, smoother, sharper };

/// Standard, smoother (enlarging) and sharper (reducing) bicubic modes. The variant fully
/// determines the kernel and the optional unsharp-mask post filter.
struct ResampleVariant {
  ResampleTag tag = ResampleTag::standard;
  CubicKernel kernel = CubicKernel::catmull_rom();
  double sharpen_amount = 0.0;
  double sharpen_sigma = 1.0;

  static ResampleVariant standard();
  static ResampleVariant smoother();
  static ResampleVariant sharper(double amount = 0.3, double sigma = 1.0);
};

std::string_view to_string(ResampleTag tag) noexcept;

/// Separable cubic resampling with edge replication.
///
/// Output sample d maps to source coordinate (d + 0.5) * in / out - 0.5 on
/// each axis (pixel centers aligned). Rows are filtered first, then
/// columns. The sharper variant applies unsharp_mask to the result.
ImagePlane bicubic_resize(const ImagePlane& plane, int out_w, int out_h,
                          const ResampleVariant& variant);

/// Mean of each 2x2 block. Requires even width and height.
ImagePlane block_downsample_2x2(const ImagePlane& plane);

/// Sampled Gaussian exp(-k^2 / (2 sigma^2)), k in [-size/2, size/2],
/// normalized to unit sum. `size` must be odd.
std::vector<double> gaussian_kernel(double sigma, int size);

/// Convolves rows then columns with a symmetric odd-length kernel, edge
/// replication at the borders.
ImagePlane convolve_separable(const ImagePlane& plane, std::span<const double> kernel);

/// Gaussian blur with a kernel truncated at 3 sigma.
ImagePlane gaussian_blur(const ImagePlane& plane, double sigma);

/// plane + amount * (plane - gaussian_blur(plane, sigma)), unclamped.
ImagePlane unsharp_mask(const ImagePlane& plane, double amount, double sigma);

}  // namespace srwave
