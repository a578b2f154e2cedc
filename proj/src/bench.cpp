#include "srwave/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <tuple>

#include "srwave/error.hpp"
#include "srwave/metrics.hpp"
#include "srwave/pnm.hpp"

namespace srwave {

namespace fs = std::filesystem;

std::vector<fs::path> list_corpus(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("corpus directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".pgm" || ext == ".ppm" || ext == ".pnm") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<BenchRow> bench_image(const Image& hr, const std::string& name,
                                  const BenchOptions& opts,
                                  std::vector<StageThreshold>* thresholds) {
  const SrConfig& cfg = opts.config;
  cfg.validate();
  if (hr.width() % (2 * cfg.scale) != 0 || hr.height() % (2 * cfg.scale) != 0) {
    throw ShapeError(name + ": dimensions " + std::to_string(hr.width()) + "x" +
                     std::to_string(hr.height()) + " must be divisible by 2*scale");
  }
  const Image lr = simulate_lr(hr, cfg);

  using Clock = std::chrono::steady_clock;
  auto timed = [](auto&& fn) {
    const auto t0 = Clock::now();
    Image out = fn();
    const std::chrono::duration<double> dt = Clock::now() - t0;
    return std::pair{std::move(out), dt.count()};
  };

  std::vector<BenchRow> rows;
  auto score = [&](const char* method, int iterations, const Image& out, double seconds) {
    rows.push_back({name, method, cfg.scale, iterations,
                    psnr(quantize(out), hr, opts.luma_only).psnr_db, seconds});
  };

  {
    auto [out, dt] = timed([&] { return bicubic_sr_baseline(lr, cfg.scale); });
    score("bicubic", 0, out, dt);
  }
  {
    SrResult sr;
    auto [out, dt] = timed([&] {
      sr = super_resolve(lr, cfg);
      return sr.image;
    });
    score("proposed", cfg.iterations, out, dt);
    if (thresholds) *thresholds = sr.trace.thresholds;
  }
  {
    auto [out, dt] = timed([&] { return wzp_sr_baseline(lr, cfg.scale, cfg.ll_scale); });
    score("wzp", 0, out, dt);
  }
  return rows;
}

BenchReport run_bench(const fs::path& corpus_dir, const BenchOptions& opts, std::ostream* log) {
  const auto files = list_corpus(corpus_dir);
  if (files.empty()) throw IoError("no PNM images in corpus " + corpus_dir.string());

  BenchReport report;
  for (const auto& file : files) {
    const std::string name = file.stem().string();
    try {
      const Image hr = load_pnm(file);
      std::vector<StageThreshold> th;
      auto rows = bench_image(hr, name, opts, &th);
      for (const auto& r : rows) {
        if (log) *log << name << ' ' << r.method << ' ' << format_psnr(r.psnr_db) << " dB\n";
        report.rows.push_back(std::move(r));
      }
      for (const auto& t : th) report.thresholds.emplace_back(name, t);
    } catch (const Error& e) {
      if (log) *log << name << ": skipped: " << e.what() << '\n';
      report.failures.push_back({name, e.what()});
    }
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.image, a.method) < std::tie(b.image, b.method);
  });
  return report;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = std::string(kBenchCsvHeader) + "\n";
  char buf[64];
  for (const auto& r : rows) {
    out += r.image + "," + r.method + "," + std::to_string(r.scale) + "," +
           std::to_string(r.iterations) + "," + format_psnr(r.psnr_db, 3) + ",";
    std::snprintf(buf, sizeof buf, "%.3f", r.runtime_s);
    out += buf;
    out += '\n';
  }
  return out;
}

std::string threshold_csv(const std::vector<std::pair<std::string, StageThreshold>>& rows) {
  std::string out = "image,channel,stage,sigma,hm,gm,T\n";
  char buf[256];
  for (const auto& [image, t] : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%.6f,%.6f,%.6f,%.6f\n", t.channel, t.stage,
                  t.report.sigma, t.report.harmonic_mean, t.report.geometric_mean,
                  t.report.threshold);
    out += image + "," + buf;
  }
  return out;
}

}  // namespace srwave
