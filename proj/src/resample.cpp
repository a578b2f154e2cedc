#include "srwave/resample.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "srwave/error.hpp"

namespace srwave {

double CubicKernel::operator()(double x) const noexcept {
  const double ax = std::abs(x);
  if (ax < 1.0) {
    return ((12.0 - 9.0 * b - 6.0 * c) * ax * ax * ax + (-18.0 + 12.0 * b + 6.0 * c) * ax * ax +
            (6.0 - 2.0 * b)) /
           6.0;
  }
  if (ax < 2.0) {
    return ((-b - 6.0 * c) * ax * ax * ax + (6.0 * b + 30.0 * c) * ax * ax +
            (-12.0 * b - 48.0 * c) * ax + (8.0 * b + 24.0 * c)) /
           6.0;
  }
  return 0.0;
}

ResampleVariant ResampleVariant::standard() {
  return {ResampleTag::standard, CubicKernel::catmull_rom(), 0.0, 1.0};
}

ResampleVariant ResampleVariant::smoother() {
  return {ResampleTag::smoother, CubicKernel::mitchell(), 0.0, 1.0};
}

ResampleVariant ResampleVariant::sharper(double amount, double sigma) {
  return {ResampleTag::sharper, CubicKernel::catmull_rom(), amount, sigma};
}

std::string_view to_string(ResampleTag tag) noexcept {
  switch (tag) {
    case ResampleTag::standard: return "standard";
    case ResampleTag::smoother: return "smoother";
    case ResampleTag::sharper: return "sharper";
  }
  return "?";
}

namespace {

// Four taps per output sample along one axis.
struct AxisTaps {
  std::vector<std::array<int, 4>> index;
  std::vector<std::array<double, 4>> weight;
};

AxisTaps make_taps(int in, int out, const CubicKernel& kernel) {
  AxisTaps taps;
  taps.index.resize(out);
  taps.weight.resize(out);
  const double ratio = static_cast<double>(in) / out;
  for (int d = 0; d < out; ++d) {
    const double src = (d + 0.5) * ratio - 0.5;
    const double base = std::floor(src);
    const double t = src - base;
    const int i0 = static_cast<int>(base);
    for (int k = 0; k < 4; ++k) {
      taps.index[d][k] = std::clamp(i0 - 1 + k, 0, in - 1);
      taps.weight[d][k] = kernel(t - (k - 1));
    }
  }
  return taps;
}

}  // namespace

ImagePlane bicubic_resize(const ImagePlane& plane, int out_w, int out_h,
                          const ResampleVariant& variant) {
  if (out_w < 1 || out_h < 1) {
    throw ShapeError("bicubic_resize: output size must be >= 1, got " + std::to_string(out_w) +
                     "x" + std::to_string(out_h));
  }
  if (plane.empty()) throw ShapeError("bicubic_resize: empty plane");

  const int in_w = plane.width();
  const int in_h = plane.height();
  const AxisTaps tx = make_taps(in_w, out_w, variant.kernel);
  const AxisTaps ty = make_taps(in_h, out_h, variant.kernel);

  ImagePlane horiz(out_w, in_h);
  for (int y = 0; y < in_h; ++y) {
    const auto src = plane.row(y);
    auto dst = horiz.row(y);
    for (int x = 0; x < out_w; ++x) {
      const auto& ix = tx.index[x];
      const auto& wx = tx.weight[x];
      dst[x] = wx[0] * src[ix[0]] + wx[1] * src[ix[1]] + wx[2] * src[ix[2]] + wx[3] * src[ix[3]];
    }
  }

  ImagePlane out(out_w, out_h);
  for (int y = 0; y < out_h; ++y) {
    const auto& iy = ty.index[y];
    const auto& wy = ty.weight[y];
    const auto r0 = horiz.row(iy[0]);
    const auto r1 = horiz.row(iy[1]);
    const auto r2 = horiz.row(iy[2]);
    const auto r3 = horiz.row(iy[3]);
    auto dst = out.row(y);
    for (int x = 0; x < out_w; ++x) {
      dst[x] = wy[0] * r0[x] + wy[1] * r1[x] + wy[2] * r2[x] + wy[3] * r3[x];
    }
  }

  if (variant.tag == ResampleTag::sharper && variant.sharpen_amount != 0.0) {
    return unsharp_mask(out, variant.sharpen_amount, variant.sharpen_sigma);
  }
  return out;
}

ImagePlane block_downsample_2x2(const ImagePlane& plane) {
  if (plane.empty() || plane.width() % 2 != 0 || plane.height() % 2 != 0) {
    throw ShapeError("block_downsample_2x2: dimensions must be even, got " +
                     std::to_string(plane.width()) + "x" + std::to_string(plane.height()));
  }
  ImagePlane out(plane.width() / 2, plane.height() / 2);
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const double sum = plane(2 * x, 2 * y) + plane(2 * x + 1, 2 * y) + plane(2 * x, 2 * y + 1) +
                         plane(2 * x + 1, 2 * y + 1);
      out(x, y) = sum / 4.0;
    }
  }
  return out;
}

std::vector<double> gaussian_kernel(double sigma, int size) {
  if (size < 1 || size % 2 == 0) {
    throw ParameterError("Gaussian kernel size must be odd and positive, got " +
                         std::to_string(size));
  }
  if (!(sigma > 0.0)) throw ParameterError("Gaussian sigma must be > 0");
  const int half = size / 2;
  std::vector<double> k(size);
  double sum = 0.0;
  for (int i = -half; i <= half; ++i) {
    const double w = std::exp(-(i * i) / (2.0 * sigma * sigma));
    k[i + half] = w;
    sum += w;
  }
  for (double& w : k) w /= sum;
  return k;
}

ImagePlane convolve_separable(const ImagePlane& plane, std::span<const double> kernel) {
  if (kernel.empty() || kernel.size() % 2 == 0) {
    throw ParameterError("convolution kernel length must be odd");
  }
  const int half = static_cast<int>(kernel.size() / 2);
  const int w = plane.width();
  const int h = plane.height();

  ImagePlane horiz(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int k = -half; k <= half; ++k) acc += kernel[k + half] * plane.clamped(x + k, y);
      horiz(x, y) = acc;
    }
  }
  ImagePlane out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int k = -half; k <= half; ++k) acc += kernel[k + half] * horiz.clamped(x, y + k);
      out(x, y) = acc;
    }
  }
  return out;
}

ImagePlane gaussian_blur(const ImagePlane& plane, double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  const auto kernel = gaussian_kernel(sigma, 2 * radius + 1);
  return convolve_separable(plane, kernel);
}

ImagePlane unsharp_mask(const ImagePlane& plane, double amount, double sigma) {
  if (amount < 0.0) throw ParameterError("unsharp_mask: amount must be >= 0");
  if (!(sigma > 0.0)) throw ParameterError("unsharp_mask: sigma must be > 0");
  if (amount == 0.0) return plane;
  const ImagePlane blurred = gaussian_blur(plane, sigma);
  ImagePlane out = plane;
  auto dst = out.samples();
  auto blur = blurred.samples();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += amount * (dst[i] - blur[i]);
  return out;
}

}  // namespace srwave
