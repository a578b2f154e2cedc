#include "srwave/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "srwave/error.hpp"

namespace srwave {

bool PsnrResult::infinite() const noexcept { return std::isinf(psnr_db); }

double mse(const Image& a, const Image& b) {
  if (!a.same_shape(b)) {
    throw ShapeError("mse: images differ in shape (" + std::to_string(a.width()) + "x" +
                     std::to_string(a.height()) + "x" + std::to_string(a.channels()) + " vs " +
                     std::to_string(b.width()) + "x" + std::to_string(b.height()) + "x" +
                     std::to_string(b.channels()) + ")");
  }
  double acc = 0.0;
  std::size_t count = 0;
  for (int c = 0; c < a.channels(); ++c) {
    const auto pa = a.plane(c).samples();
    const auto pb = b.plane(c).samples();
    for (std::size_t i = 0; i < pa.size(); ++i) {
      const double d = pa[i] - pb[i];
      acc += d * d;
    }
    count += pa.size();
  }
  return acc / static_cast<double>(count);
}

Image luma(const Image& img) {
  if (img.channels() == 1) return img;
  const auto r = img.plane(0).samples();
  const auto g = img.plane(1).samples();
  const auto b = img.plane(2).samples();
  ImagePlane y(img.width(), img.height());
  auto dst = y.samples();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = 0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i];
  return Image({std::move(y)}, img.max_value());
}

PsnrResult psnr(const Image& a, const Image& b, bool luma_only) {
  PsnrResult r;
  r.max_value = a.max_value();
  r.mse = luma_only ? mse(luma(a), luma(b)) : mse(a, b);
  r.psnr_db = r.mse == 0.0 ? std::numeric_limits<double>::infinity()
                           : 20.0 * std::log10(r.max_value / std::sqrt(r.mse));
  return r;
}

std::string format_psnr(double psnr_db, int decimals) {
  if (std::isinf(psnr_db)) return psnr_db > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, psnr_db);
  return buf;
}

}  // namespace srwave
