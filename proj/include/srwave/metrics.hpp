#pragma once

#include <string>

#include "srwave/image.hpp"

namespace srwave {

struct PsnrResult {
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity when mse == 0
  int max_value = Image::kMaxValue;

  bool infinite() const noexcept;
};

/// Mean squared difference over all planes jointly.
double mse(const Image& a, const Image& b);

/// 20 log10(MAX / sqrt(MSE)). With `luma_only`, RGB inputs are compared
/// on their BT.601 luma instead of jointly over R, G, B.
PsnrResult psnr(const Image& a, const Image& b, bool luma_only = false);

/// BT.601 luma plane (0.299 R + 0.587 G + 0.114 B); grayscale passes through.
Image luma(const Image& img);

/// "inf" or the value with `decimals` digits.
std::string format_psnr(double psnr_db, int decimals = 3);

}  // namespace srwave
