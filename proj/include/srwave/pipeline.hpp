#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srwave/denoise.hpp"
#include "srwave/image.hpp"
#include "srwave/resample.hpp"

namespace srwave {

enum class DownVariant { bicubic_sharper, block_2x2 };

std::string_view to_string(DownVariant v) noexcept;

/// Knobs for the super-resolution pipeline. Defaults are the reference
/// configuration: x2, three back-projection passes, 5x5 sigma-1 PSF,
/// HH denoising on, bicubic-sharper down-sampling.
struct SrConfig {
  int scale = 2;  // 2, 4 or 8
  int iterations = 3;
  double psf_sigma = 1.0;
  int psf_size = 5;
  bool denoise_enabled = true;
  DownVariant down_variant = DownVariant::bicubic_sharper;
  double epsilon = kDefaultEpsilon;
  double ll_scale = 2.0;  // WZP baseline only
  double sharpen_amount = 0.3;
  double sharpen_sigma = 1.0;

  /// Throws ParameterError when any field is out of range.
  void validate() const;
  int levels() const noexcept;  // log2(scale)
  ResampleVariant down_resampler() const;
  ResampleVariant up_resampler() const;
};

struct IterationStep {
  int iteration = 0;        // 1-based
  double rms_error = 0.0;   // RMS of lr - downsample(H), all channels jointly
  std::optional<double> psnr_db;  // of the quantized estimate after the update
};

/// One ThresholdReport per (channel, x2 stage) of the wavelet up-sampler.
struct StageThreshold {
  int channel = 0;
  int stage = 0;
  ThresholdReport report;
};

struct IterationTrace {
  std::vector<IterationStep> steps;
  std::vector<StageThreshold> thresholds;
};

/// Down-sample by cfg.scale with the configured variant.
ImagePlane downsample(const ImagePlane& plane, const SrConfig& cfg);

/// Step 1: produce the observed low-resolution image from a high-resolution one.
Image simulate_lr(const Image& hr, const SrConfig& cfg);

/// Separable Gaussian PSF filter, unit-sum kernel, edge replication.
ImagePlane gaussian_psf(const ImagePlane& plane, double sigma, int size);

/// Options that exist only to isolate terms of the up-sampler in tests.
struct UpsampleAblation {
  bool zero_swt_details = false;
};

/// Wavelet-domain x2 up-sampler: SWT details of the LR plane are added to
/// the DWT details of its smoother-bicubic x2 enlargement, HH is optionally
/// denoised, and the result is synthesized with the enlargement's LL band.
ImagePlane wavelet_upsample_2x(const ImagePlane& lr, const SrConfig& cfg,
                               ThresholdReport* report = nullptr,
                               UpsampleAblation ablation = {});

struct SrResult {
  Image image;  // clamped to [0, max], not rounded
  IterationTrace trace;
};

/// Full pipeline: cascaded x2 wavelet up-sampling, one PSF pass, then
/// `iterations` rounds of back-projection.
SrResult super_resolve(const Image& lr, const SrConfig& cfg,
                       const std::optional<Image>& ground_truth = std::nullopt);

/// Plain Catmull-Rom enlargement by `scale`, clamped.
Image bicubic_sr_baseline(const Image& lr, int scale);

/// Wavelet zero-padding enlargement applied log2(scale) times, clamped.
Image wzp_sr_baseline(const Image& lr, int scale, double ll_scale = 2.0);

/// "iteration,rms_error,psnr_if_available" rows; empty psnr when absent.
std::string trace_csv(const IterationTrace& trace);

}  // namespace srwave
