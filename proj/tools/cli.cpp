#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "srwave/bench.hpp"
#include "srwave/error.hpp"
#include "srwave/metrics.hpp"
#include "srwave/pipeline.hpp"
#include "srwave/pnm.hpp"

namespace srwave::cli {

namespace {

void add_config_flags(CLI::App& cmd, SrConfig& cfg) {
  cmd.add_option("--scale", cfg.scale, "Magnification factor")
      ->check(CLI::IsMember({2, 4, 8}))
      ->capture_default_str();
  cmd.add_option("--iterations", cfg.iterations, "Back-projection passes")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd.add_option("--psf-sigma", cfg.psf_sigma, "Gaussian PSF sigma (pixels)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--psf-size", cfg.psf_size, "Gaussian PSF width (odd, >= 3)")->capture_default_str();
  cmd.add_flag("!--no-denoise", cfg.denoise_enabled, "Skip HH-band soft thresholding");
  cmd.add_option_function<std::string>(
         "--down",
         [&cfg](const std::string& v) {
           cfg.down_variant = v == "block" ? DownVariant::block_2x2 : DownVariant::bicubic_sharper;
         },
         "Down-sampler: sharper|block")
      ->check(CLI::IsMember({"sharper", "block"}))
      ->default_str("sharper");
  cmd.add_option("--ll-scale", cfg.ll_scale, "LL gain for the WZP baseline")->capture_default_str();
  cmd.add_option("--epsilon", cfg.epsilon, "Magnitude floor for the HH band means")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--sharpen-amount", cfg.sharpen_amount, "Unsharp-mask amount of the sharper variant")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd.add_option("--sharpen-sigma", cfg.sharpen_sigma, "Unsharp-mask sigma of the sharper variant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int cmd_sr(const std::string& input, const std::string& output, const std::string& method,
           const std::optional<std::string>& truth_path, const SrConfig& cfg, bool verbose,
           std::ostream& out) {
  cfg.validate();
  const Image lr = load_pnm(input);
  Image result;
  if (method == "bicubic") {
    result = bicubic_sr_baseline(lr, cfg.scale);
  } else if (method == "wzp") {
    result = wzp_sr_baseline(lr, cfg.scale, cfg.ll_scale);
  } else {
    std::optional<Image> truth;
    if (truth_path) truth = load_pnm(*truth_path);
    SrResult sr = super_resolve(lr, cfg, truth);
    result = std::move(sr.image);
    if (verbose) {
      out << trace_csv(sr.trace);
      if (!sr.trace.thresholds.empty()) {
        std::vector<std::pair<std::string, StageThreshold>> rows;
        for (const auto& t : sr.trace.thresholds) rows.emplace_back(input, t);
        out << threshold_csv(rows);
      }
    }
  }
  save_pnm(result, output);
  return kOk;
}

int cmd_bench(const std::string& corpus, const std::string& report_path, const BenchOptions& opts,
              bool verbose, std::ostream& err) {
  const BenchReport report = run_bench(corpus, opts, verbose ? &err : nullptr);
  for (const auto& f : report.failures) err << "warning: " << f.image << ": " << f.message << '\n';

  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << text;
    if (!f) throw IoError("write failed: " + path);
  };
  write(report_path, bench_csv(report.rows));
  if (verbose) write(report_path + ".thresholds.csv", threshold_csv(report.thresholds));

  if (report.rows.empty()) {
    err << "error: no corpus image could be processed\n";
    return kShape;
  }
  return kOk;
}

int cmd_psnr(const std::string& a, const std::string& b, bool luma_only, std::ostream& out) {
  const PsnrResult r = psnr(load_pnm(a), load_pnm(b), luma_only);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r.mse);
  out << "psnr_db: " << format_psnr(r.psnr_db, 4) << "\nmse: " << buf << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-image super-resolution in the wavelet and spatial domains", "srwave"};
  app.require_subcommand(1);

  SrConfig cfg;
  bool verbose = false;
  bool luma_only = false;

  std::string sr_in, sr_out, method = "proposed";
  std::optional<std::string> truth;
  auto* sr = app.add_subcommand("sr", "Super-resolve one PNM image");
  sr->add_option("input", sr_in, "Low-resolution PGM/PPM")->required();
  sr->add_option("output", sr_out, "Destination PGM/PPM")->required();
  sr->add_option("--method", method, "proposed|bicubic|wzp")
      ->check(CLI::IsMember({"proposed", "bicubic", "wzp"}))
      ->capture_default_str();
  sr->add_option("--truth", truth, "High-resolution reference; adds PSNR to the trace");
  add_config_flags(*sr, cfg);
  sr->add_flag("--verbose,-v", verbose, "Print the iteration trace");

  std::string corpus, report;
  auto* bench = app.add_subcommand("bench", "PSNR comparison of bicubic, WZP and proposed");
  bench->add_option("corpus_dir", corpus, "Directory of high-resolution PNM images")->required();
  bench->add_option("report", report, "CSV output path")->required();
  add_config_flags(*bench, cfg);
  bench->add_flag("--luma-only", luma_only, "Measure PSNR on BT.601 luma");
  bench->add_flag("--verbose,-v", verbose, "Log progress and write a threshold sidecar CSV");

  std::string pa, pb;
  auto* ps = app.add_subcommand("psnr", "PSNR and MSE between two PNM images");
  ps->add_option("a", pa)->required();
  ps->add_option("b", pb)->required();
  ps->add_flag("--luma-only", luma_only, "Measure PSNR on BT.601 luma");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (sr->parsed()) return cmd_sr(sr_in, sr_out, method, truth, cfg, verbose, out);
    if (bench->parsed()) return cmd_bench(corpus, report, {cfg, luma_only}, verbose, err);
    if (ps->parsed()) return cmd_psnr(pa, pb, luma_only, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    // ShapeError, FormatError, UnsupportedDepthError
    err << "error: " << e.what() << '\n';
    return kShape;
  }
  return kUsage;
}

}  // namespace srwave::cli
