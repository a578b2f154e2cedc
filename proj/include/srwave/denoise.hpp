#pragma once

#include "srwave/image.hpp"

namespace srwave {

inline constexpr double kMadConstant = 0.6745;
inline constexpr double kDefaultEpsilon = 1e-6;

struct BandMeans {
  double harmonic = 0.0;
  double geometric = 0.0;
};

/// Everything computed on the way to a shrinkage threshold, for logging.
struct ThresholdReport {
  double sigma = 0.0;
  double harmonic_mean = 0.0;
  double geometric_mean = 0.0;
  double threshold = 0.0;  // max(0, sigma - |hm - gm|)
  int band_width = 0;
  int band_height = 0;
};

/// Robust noise level: median(|band|) / 0.6745. The median of an even
/// count is the mean of the two central order statistics.
double mad_sigma(const ImagePlane& band);

/// Harmonic and geometric means of g = max(|band|, epsilon). The geometric
/// mean is accumulated in the log domain.
BandMeans band_means(const ImagePlane& band, double epsilon = kDefaultEpsilon);

ThresholdReport threshold_value(const ImagePlane& band, double epsilon = kDefaultEpsilon);

/// sign(p) * max(0, |p| - t)
ImagePlane soft_threshold(const ImagePlane& band, double t);

/// p if |p| > t, else 0 (ties are zeroed).
ImagePlane hard_threshold(const ImagePlane& band, double t);

/// Soft-threshold the band with its own threshold_value.
ImagePlane denoise_hh(const ImagePlane& band, double epsilon = kDefaultEpsilon,
                      ThresholdReport* report = nullptr);

}  // namespace srwave
