#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "srwave/error.hpp"
#include "srwave/pipeline.hpp"
#include "srwave/pnm.hpp"
#include "srwave/wavelet.hpp"

using namespace srwave;

namespace {

Image camera() { return load_pnm(std::filesystem::path(SRWAVE_TEST_DATA_DIR) / "camera256.pgm"); }
Image astronaut() {
  return load_pnm(std::filesystem::path(SRWAVE_TEST_DATA_DIR) / "astronaut128.ppm");
}

bool all_near(const ImagePlane& p, double v, double tol) {
  for (double s : p.samples())
    if (std::abs(s - v) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("SrConfig validation") {
  SrConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.levels() == 1);
  cfg.scale = 8;
  CHECK(cfg.levels() == 3);
  cfg.scale = 3;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg = {};
  cfg.psf_size = 4;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg = {};
  cfg.psf_size = 1;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg = {};
  cfg.iterations = -1;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg = {};
  cfg.psf_sigma = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
}

TEST_CASE("simulate_lr") {
  SrConfig cfg;
  const auto lr = simulate_lr(Image({ImagePlane(512, 512, 77.0)}), cfg);
  CHECK(lr.width() == 256);
  CHECK(lr.height() == 256);
  CHECK(all_near(lr.plane(0), 77.0, 1e-9));

  cfg.down_variant = DownVariant::block_2x2;
  const auto block = simulate_lr(Image({ImagePlane(2, 2, std::vector<double>{1, 3, 5, 7})}), cfg);
  CHECK(block.plane(0) == ImagePlane(1, 1, 4.0));

  cfg.scale = 4;
  const auto quarter = simulate_lr(Image({ImagePlane(16, 8, 9.0)}), cfg);
  CHECK(quarter.width() == 4);
  CHECK(quarter.height() == 2);
  CHECK_THROWS_AS(simulate_lr(Image({ImagePlane(10, 8)}), cfg), ShapeError);
}

TEST_CASE("gaussian_psf") {
  CHECK(all_near(gaussian_psf(ImagePlane(9, 7, 200.0), 1.0, 5), 200.0, 1e-9));
  CHECK_THROWS_AS(gaussian_psf(ImagePlane(4, 4), 1.0, 4), ParameterError);

  ImagePlane impulse(21, 21);
  impulse(10, 10) = 1.0;
  const auto out = gaussian_psf(impulse, 1.0, 5);
  const auto k = testing::dense_gaussian(1.0, 5);
  for (int y = 0; y < 21; ++y)
    for (int x = 0; x < 21; ++x) {
      const int dx = x - 10, dy = y - 10;
      const double expect = (std::abs(dx) <= 2 && std::abs(dy) <= 2) ? k[dy + 2][dx + 2] : 0.0;
      CHECK(std::abs(out(x, y) - expect) < 1e-15);
    }
}

TEST_CASE("wavelet_upsample_2x") {
  SrConfig cfg;
  const auto c = wavelet_upsample_2x(ImagePlane(12, 8, 93.0), cfg);
  CHECK(c.width() == 24);
  CHECK(c.height() == 16);
  CHECK(all_near(c, 93.0, 1e-9));
  CHECK_THROWS_AS(wavelet_upsample_2x(ImagePlane(5, 4), cfg), ShapeError);

  SUBCASE("without the SWT correction and denoising it is the plain smoother x2") {
    const auto lr = camera().plane(0);
    cfg.denoise_enabled = false;
    const auto out = wavelet_upsample_2x(lr, cfg, nullptr, {.zero_swt_details = true});
    const auto plain = bicubic_resize(lr, 512, 512, ResampleVariant::smoother());
    CHECK(testing::max_abs_diff(out, plain) < 1e-9);
  }

  SUBCASE("the SWT correction is the synthesis of the LR detail bands") {
    std::mt19937_64 rng(41);
    const auto lr = testing::random_plane(rng, 16, 12);
    cfg.denoise_enabled = false;
    const auto with = wavelet_upsample_2x(lr, cfg);
    const auto without = wavelet_upsample_2x(lr, cfg, nullptr, {.zero_swt_details = true});
    const auto s = swt2_haar(lr);
    const ImagePlane zero(16, 12);
    const auto correction = idwt2_haar({zero, s.lh, s.hl, s.hh, true});
    CHECK(testing::max_abs_diff(plane_sub(with, without), correction) < 1e-9);
  }

  SUBCASE("denoising reports the HH threshold") {
    ThresholdReport r;
    wavelet_upsample_2x(camera().plane(0), cfg, &r);
    CHECK(r.band_width == 256);
    CHECK(r.sigma > 0.0);
    CHECK(r.threshold >= 0.0);
  }
}

TEST_CASE("super_resolve with zero iterations is the filtered wavelet upsample") {
  SrConfig cfg;
  cfg.iterations = 0;
  const auto lr = camera();
  const auto sr = super_resolve(lr, cfg);
  CHECK(sr.trace.steps.empty());
  const auto expect =
      gaussian_psf(wavelet_upsample_2x(lr.plane(0), cfg), cfg.psf_sigma, cfg.psf_size);
  CHECK(sr.image.plane(0) == clamp(Image({expect})).plane(0));
}

TEST_CASE("constant image is a fixed point of super_resolve") {
  SrConfig cfg;
  for (int iterations : {0, 1, 3, 5}) {
    cfg.iterations = iterations;
    const auto sr = super_resolve(Image({ImagePlane(32, 16, 128.0)}), cfg);
    CHECK(all_near(sr.image.plane(0), 128.0, 1e-6));
    for (const auto& s : sr.trace.steps) CHECK(s.rms_error < 1e-9);
  }
}

TEST_CASE("back-projection residual does not grow") {
  const Image hr = camera();
  SrConfig cfg;
  const Image lr = simulate_lr(hr, cfg);
  for (auto down : {DownVariant::bicubic_sharper, DownVariant::block_2x2}) {
    cfg.down_variant = down;
    cfg.iterations = 5;
    const auto sr = super_resolve(lr, cfg, hr);
    REQUIRE(sr.trace.steps.size() == 5);
    for (std::size_t i = 1; i < sr.trace.steps.size(); ++i)
      CHECK(sr.trace.steps[i].rms_error <= sr.trace.steps[i - 1].rms_error);
    CHECK(sr.trace.steps[0].psnr_db.has_value());
  }
}

TEST_CASE("super_resolve is deterministic and channel independent") {
  const Image rgb = astronaut();
  SrConfig cfg;
  const Image lr = simulate_lr(rgb, cfg);
  const auto a = super_resolve(lr, cfg);
  const auto b = super_resolve(lr, cfg);
  CHECK(a.image == b.image);
  for (int c = 0; c < 3; ++c) {
    const auto single = super_resolve(Image({lr.plane(c)}), cfg);
    CHECK(single.image.plane(0) == a.image.plane(c));
  }
  CHECK(a.trace.thresholds.size() == 3);
}

TEST_CASE("super_resolve shape contracts") {
  SrConfig cfg;
  CHECK_THROWS_AS(super_resolve(Image({ImagePlane(5, 4)}), cfg), ShapeError);
  CHECK_THROWS_AS(super_resolve(Image({ImagePlane(4, 4)}), cfg, Image({ImagePlane(4, 4)})),
                  ShapeError);
  cfg.scale = 4;
  const auto sr = super_resolve(Image({ImagePlane(8, 6, 10.0)}), cfg);
  CHECK(sr.image.width() == 32);
  CHECK(sr.image.height() == 24);
  CHECK(sr.trace.steps.size() == 3);
}

TEST_CASE("baselines") {
  const auto bic = bicubic_sr_baseline(Image({ImagePlane(6, 4, 50.0)}), 2);
  CHECK(bic.width() == 12);
  CHECK(bic.height() == 8);
  CHECK(all_near(bic.plane(0), 50.0, 1e-9));
  const auto wzp = wzp_sr_baseline(Image({ImagePlane(6, 4, 50.0)}), 4);
  CHECK(wzp.width() == 24);
  CHECK(all_near(wzp.plane(0), 50.0, 1e-9));
  // Output is clamped to the intensity range.
  const auto over = bicubic_sr_baseline(Image({ImagePlane(2, 1, std::vector<double>{0, 255})}), 2);
  for (double v : over.plane(0).samples()) CHECK((v >= 0.0 && v <= 255.0));
}

TEST_CASE("trace CSV") {
  IterationTrace t;
  t.steps.push_back({1, 2.5, 30.1234});
  t.steps.push_back({2, 0.25, std::nullopt});
  CHECK(trace_csv(t) == "iteration,rms_error,psnr_if_available\n1,2.500000,30.123\n2,0.250000,\n");
}
