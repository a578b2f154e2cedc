#include "srwave/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <limits>

#include "srwave/error.hpp"
#include "srwave/wavelet.hpp"

namespace srwave {

std::string_view to_string(DownVariant v) noexcept {
  switch (v) {
    case DownVariant::bicubic_sharper: return "sharper";
    case DownVariant::block_2x2: return "block";
  }
  return "?";
}

void SrConfig::validate() const {
  if (scale != 2 && scale != 4 && scale != 8) {
    throw ParameterError("scale must be 2, 4 or 8, got " + std::to_string(scale));
  }
  if (iterations < 0) throw ParameterError("iterations must be >= 0");
  if (!(psf_sigma > 0.0)) throw ParameterError("psf sigma must be > 0");
  if (psf_size < 3 || psf_size % 2 == 0) {
    throw ParameterError("psf size must be odd and >= 3, got " + std::to_string(psf_size));
  }
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be > 0");
  if (sharpen_amount < 0.0) throw ParameterError("sharpen amount must be >= 0");
  if (!(sharpen_sigma > 0.0)) throw ParameterError("sharpen sigma must be > 0");
}

int SrConfig::levels() const noexcept {
  int n = 0;
  for (int s = scale; s > 1; s >>= 1) ++n;
  return n;
}

ResampleVariant SrConfig::down_resampler() const {
  return ResampleVariant::sharper(sharpen_amount, sharpen_sigma);
}

ResampleVariant SrConfig::up_resampler() const { return ResampleVariant::smoother(); }

ImagePlane downsample(const ImagePlane& plane, const SrConfig& cfg) {
  if (plane.width() % cfg.scale != 0 || plane.height() % cfg.scale != 0) {
    throw ShapeError("dimensions " + std::to_string(plane.width()) + "x" +
                     std::to_string(plane.height()) + " are not divisible by scale " +
                     std::to_string(cfg.scale));
  }
  if (cfg.down_variant == DownVariant::block_2x2) {
    ImagePlane out = plane;
    for (int i = 0; i < cfg.levels(); ++i) out = block_downsample_2x2(out);
    return out;
  }
  return bicubic_resize(plane, plane.width() / cfg.scale, plane.height() / cfg.scale,
                        cfg.down_resampler());
}

Image simulate_lr(const Image& hr, const SrConfig& cfg) {
  cfg.validate();
  std::vector<ImagePlane> planes;
  for (const auto& p : hr.planes()) planes.push_back(downsample(p, cfg));
  return Image(std::move(planes), hr.max_value());
}

ImagePlane gaussian_psf(const ImagePlane& plane, double sigma, int size) {
  if (size % 2 == 0) throw ParameterError("gaussian_psf: kernel size must be odd");
  const auto kernel = gaussian_kernel(sigma, size);
  return convolve_separable(plane, kernel);
}

ImagePlane wavelet_upsample_2x(const ImagePlane& lr, const SrConfig& cfg, ThresholdReport* report,
                               UpsampleAblation ablation) {
  const SubBands s = swt2_haar(lr);
  const ImagePlane up = bicubic_resize(lr, 2 * lr.width(), 2 * lr.height(), cfg.up_resampler());
  SubBands d = dwt2_haar(up);

  if (!ablation.zero_swt_details) {
    d.lh = plane_add(s.lh, d.lh);
    d.hl = plane_add(s.hl, d.hl);
    d.hh = plane_add(s.hh, d.hh);
  }
  if (cfg.denoise_enabled) d.hh = denoise_hh(d.hh, cfg.epsilon, report);
  return idwt2_haar(d);
}

namespace {

struct ChannelRun {
  ImagePlane estimate;
  std::vector<double> residual_sse;  // per iteration
  std::vector<double> truth_sse;     // per iteration, quantized estimate vs truth
  std::vector<ThresholdReport> thresholds;
};

double sum_squares(const ImagePlane& p) {
  double acc = 0.0;
  for (double v : p.samples()) acc += v * v;
  return acc;
}

double quantized_sse(const ImagePlane& estimate, const ImagePlane& truth, int max_value) {
  double acc = 0.0;
  const auto e = estimate.samples();
  const auto t = truth.samples();
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double d = quantize_sample(e[i], max_value) - t[i];
    acc += d * d;
  }
  return acc;
}

ChannelRun run_channel(const ImagePlane& lr, const SrConfig& cfg, const ImagePlane* truth,
                       int max_value) {
  ChannelRun run;
  ImagePlane h = lr;
  for (int stage = 0; stage < cfg.levels(); ++stage) {
    ThresholdReport report;
    h = wavelet_upsample_2x(h, cfg, &report);
    if (cfg.denoise_enabled) run.thresholds.push_back(report);
  }
  h = gaussian_psf(h, cfg.psf_sigma, cfg.psf_size);

  const ResampleVariant up = cfg.up_resampler();
  for (int it = 0; it < cfg.iterations; ++it) {
    const ImagePlane low = downsample(h, cfg);
    const ImagePlane err = plane_sub(lr, low);
    run.residual_sse.push_back(sum_squares(err));
    h = plane_add(h, bicubic_resize(err, h.width(), h.height(), up));
    if (truth) run.truth_sse.push_back(quantized_sse(h, *truth, max_value));
  }
  run.estimate = std::move(h);
  return run;
}

}  // namespace

SrResult super_resolve(const Image& lr, const SrConfig& cfg,
                       const std::optional<Image>& ground_truth) {
  cfg.validate();
  if (lr.width() % 2 != 0 || lr.height() % 2 != 0) {
    throw ShapeError("super_resolve: low-resolution dimensions must be even, got " +
                     std::to_string(lr.width()) + "x" + std::to_string(lr.height()));
  }
  if (ground_truth) {
    if (ground_truth->channels() != lr.channels() ||
        ground_truth->width() != lr.width() * cfg.scale ||
        ground_truth->height() != lr.height() * cfg.scale) {
      throw ShapeError("super_resolve: ground truth must be the low-resolution size times scale");
    }
  }

  // Channels are independent; results are gathered in channel order.
  std::vector<std::future<ChannelRun>> jobs;
  for (int c = 0; c < lr.channels(); ++c) {
    const ImagePlane* truth = ground_truth ? &ground_truth->plane(c) : nullptr;
    jobs.push_back(std::async(std::launch::async, run_channel, std::cref(lr.plane(c)),
                              std::cref(cfg), truth, lr.max_value()));
  }
  std::vector<ChannelRun> runs;
  for (auto& j : jobs) runs.push_back(j.get());

  SrResult result;
  const double lr_count = static_cast<double>(lr.width()) * lr.height() * lr.channels();
  const double hr_count = lr_count * cfg.scale * cfg.scale;
  for (int it = 0; it < cfg.iterations; ++it) {
    IterationStep step;
    step.iteration = it + 1;
    double residual = 0.0;
    double truth = 0.0;
    for (const auto& r : runs) {
      residual += r.residual_sse[it];
      if (ground_truth) truth += r.truth_sse[it];
    }
    step.rms_error = std::sqrt(residual / lr_count);
    if (ground_truth) {
      const double m = truth / hr_count;
      step.psnr_db = m == 0.0 ? std::numeric_limits<double>::infinity()
                              : 20.0 * std::log10(lr.max_value() / std::sqrt(m));
    }
    result.trace.steps.push_back(step);
  }

  std::vector<ImagePlane> planes;
  for (int c = 0; c < static_cast<int>(runs.size()); ++c) {
    for (int s = 0; s < static_cast<int>(runs[c].thresholds.size()); ++s)
      result.trace.thresholds.push_back({c, s, runs[c].thresholds[s]});
    planes.push_back(std::move(runs[c].estimate));
  }
  result.image = clamp(Image(std::move(planes), lr.max_value()));
  return result;
}

Image bicubic_sr_baseline(const Image& lr, int scale) {
  if (scale < 1) throw ParameterError("scale must be >= 1");
  std::vector<ImagePlane> planes;
  for (const auto& p : lr.planes())
    planes.push_back(
        bicubic_resize(p, p.width() * scale, p.height() * scale, ResampleVariant::standard()));
  return clamp(Image(std::move(planes), lr.max_value()));
}

Image wzp_sr_baseline(const Image& lr, int scale, double ll_scale) {
  SrConfig probe;
  probe.scale = scale;
  probe.validate();
  std::vector<ImagePlane> planes;
  for (const auto& p : lr.planes()) {
    ImagePlane h = p;
    for (int i = 0; i < probe.levels(); ++i) h = wzp_upscale(h, ll_scale);
    planes.push_back(std::move(h));
  }
  return clamp(Image(std::move(planes), lr.max_value()));
}

std::string trace_csv(const IterationTrace& trace) {
  std::string out = "iteration,rms_error,psnr_if_available\n";
  char buf[128];
  for (const auto& s : trace.steps) {
    std::snprintf(buf, sizeof buf, "%d,%.6f,", s.iteration, s.rms_error);
    out += buf;
    if (s.psnr_db) {
      if (std::isinf(*s.psnr_db)) {
        out += "inf";
      } else {
        std::snprintf(buf, sizeof buf, "%.3f", *s.psnr_db);
        out += buf;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace srwave
