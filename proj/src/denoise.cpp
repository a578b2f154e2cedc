#include "srwave/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "srwave/error.hpp"

namespace srwave {

double mad_sigma(const ImagePlane& band) {
  if (band.empty()) throw ShapeError("mad_sigma: empty band");
  std::vector<double> mags(band.size());
  std::transform(band.samples().begin(), band.samples().end(), mags.begin(),
                 [](double v) { return std::abs(v); });

  const std::size_t n = mags.size();
  const auto mid = mags.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(mags.begin(), mid, mags.end());
  double median = *mid;
  if (n % 2 == 0) {
    // Lower central value is the largest element left of mid.
    const double lower = *std::max_element(mags.begin(), mid);
    median = 0.5 * (lower + median);
  }
  return median / kMadConstant;
}

BandMeans band_means(const ImagePlane& band, double epsilon) {
  if (!(epsilon > 0.0)) throw ParameterError("band_means: epsilon must be > 0");
  if (band.empty()) throw ShapeError("band_means: empty band");
  double inv_sum = 0.0;
  double log_sum = 0.0;
  for (double v : band.samples()) {
    const double g = std::max(std::abs(v), epsilon);
    inv_sum += 1.0 / g;
    log_sum += std::log(g);
  }
  const double n = static_cast<double>(band.size());
  return {n / inv_sum, std::exp(log_sum / n)};
}

ThresholdReport threshold_value(const ImagePlane& band, double epsilon) {
  const double sigma = mad_sigma(band);
  const BandMeans means = band_means(band, epsilon);
  ThresholdReport r;
  r.sigma = sigma;
  r.harmonic_mean = means.harmonic;
  r.geometric_mean = means.geometric;
  r.threshold = std::max(0.0, sigma - std::abs(means.harmonic - means.geometric));
  r.band_width = band.width();
  r.band_height = band.height();
  return r;
}

ImagePlane soft_threshold(const ImagePlane& band, double t) {
  if (t < 0.0) throw ParameterError("soft_threshold: threshold must be >= 0");
  ImagePlane out = band;
  for (double& v : out.samples()) {
    const double mag = std::max(0.0, std::abs(v) - t);
    v = mag == 0.0 ? 0.0 : std::copysign(mag, v);
  }
  return out;
}

ImagePlane hard_threshold(const ImagePlane& band, double t) {
  if (t < 0.0) throw ParameterError("hard_threshold: threshold must be >= 0");
  ImagePlane out = band;
  for (double& v : out.samples())
    if (!(std::abs(v) > t)) v = 0.0;
  return out;
}

ImagePlane denoise_hh(const ImagePlane& band, double epsilon, ThresholdReport* report) {
  const ThresholdReport r = threshold_value(band, epsilon);
  if (report) *report = r;
  return soft_threshold(band, r.threshold);
}

}  // namespace srwave
