#include "srwave/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "srwave/error.hpp"

namespace srwave {

namespace {

void require_dims(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw ShapeError("plane dimensions must be positive, got " + std::to_string(width) + "x" +
                     std::to_string(height));
  }
}

void require_same_shape(const ImagePlane& a, const ImagePlane& b, const char* op) {
  if (!a.same_shape(b)) {
    throw ShapeError(std::string(op) + ": dimension mismatch " + std::to_string(a.width()) + "x" +
                     std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                     std::to_string(b.height()));
  }
}

int wrap_index(int i, int n) noexcept {
  int r = i % n;
  return r < 0 ? r + n : r;
}

}  // namespace

ImagePlane::ImagePlane(int width, int height, double fill) : width_(width), height_(height) {
  require_dims(width, height);
  samples_.assign(static_cast<std::size_t>(width) * height, fill);
}

ImagePlane::ImagePlane(int width, int height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  require_dims(width, height);
  if (samples_.size() != static_cast<std::size_t>(width) * height) {
    throw ShapeError("sample count " + std::to_string(samples_.size()) + " does not match " +
                     std::to_string(width) + "x" + std::to_string(height));
  }
}

double ImagePlane::wrapped(int x, int y) const noexcept {
  return (*this)(wrap_index(x, width_), wrap_index(y, height_));
}

double ImagePlane::clamped(int x, int y) const noexcept {
  return (*this)(std::clamp(x, 0, width_ - 1), std::clamp(y, 0, height_ - 1));
}

Image::Image(std::vector<ImagePlane> planes, int max_value)
    : planes_(std::move(planes)), max_value_(max_value) {
  if (planes_.size() != 1 && planes_.size() != 3) {
    throw ShapeError("image must have 1 or 3 planes, got " + std::to_string(planes_.size()));
  }
  for (const auto& p : planes_) {
    if (p.empty()) throw ShapeError("image plane is empty");
    if (!p.same_shape(planes_[0])) throw ShapeError("image planes differ in size");
  }
}

bool Image::same_shape(const Image& other) const noexcept {
  return channels() == other.channels() && width() == other.width() && height() == other.height();
}

ImagePlane plane_add(const ImagePlane& a, const ImagePlane& b) {
  require_same_shape(a, b, "plane_add");
  ImagePlane out = a;
  auto dst = out.samples();
  auto src = b.samples();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return out;
}

ImagePlane plane_sub(const ImagePlane& a, const ImagePlane& b) {
  require_same_shape(a, b, "plane_sub");
  ImagePlane out = a;
  auto dst = out.samples();
  auto src = b.samples();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
  return out;
}

ImagePlane plane_scale(const ImagePlane& a, double factor) {
  ImagePlane out = a;
  for (double& v : out.samples()) v *= factor;
  return out;
}

double quantize_sample(double v, int max_value) noexcept {
  // std::round rounds half away from zero.
  return std::round(std::clamp(v, 0.0, static_cast<double>(max_value)));
}

Image clamp(const Image& img) {
  std::vector<ImagePlane> planes = img.planes();
  const double hi = img.max_value();
  for (auto& p : planes)
    for (double& v : p.samples()) v = std::clamp(v, 0.0, hi);
  return Image(std::move(planes), img.max_value());
}

Image quantize(const Image& img) {
  std::vector<ImagePlane> planes = img.planes();
  for (auto& p : planes)
    for (double& v : p.samples()) v = quantize_sample(v, img.max_value());
  return Image(std::move(planes), img.max_value());
}

double rms(const ImagePlane& p) noexcept {
  if (p.empty()) return 0.0;
  double acc = 0.0;
  for (double v : p.samples()) acc += v * v;
  return std::sqrt(acc / static_cast<double>(p.size()));
}

}  // namespace srwave
