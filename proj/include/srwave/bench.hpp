#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "srwave/image.hpp"
#include "srwave/pipeline.hpp"

namespace srwave {

inline constexpr const char* kBenchCsvHeader = "image,method,scale,iterations,psnr_db,runtime_s";

struct BenchRow {
  std::string image;
  std::string method;  // bicubic | proposed | wzp
  int scale = 2;
  int iterations = 0;
  double psnr_db = 0.0;
  double runtime_s = 0.0;
};

struct BenchOptions {
  SrConfig config;
  bool luma_only = false;
};

struct BenchFailure {
  std::string image;
  std::string message;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // sorted by image, then method
  std::vector<BenchFailure> failures;
  std::vector<std::pair<std::string, StageThreshold>> thresholds;
};

/// PNM files (.pgm, .ppm, .pnm) directly inside `dir`, sorted by name.
std::vector<std::filesystem::path> list_corpus(const std::filesystem::path& dir);

/// Simulates the LR observation of `hr` and scores every method against it.
/// PSNR is measured on quantized (8-bit) outputs.
std::vector<BenchRow> bench_image(const Image& hr, const std::string& name,
                                  const BenchOptions& opts,
                                  std::vector<StageThreshold>* thresholds = nullptr);

/// Runs bench_image over every corpus file. Unreadable or ill-shaped files
/// are recorded as failures and skipped. Progress goes to `log` if given.
BenchReport run_bench(const std::filesystem::path& corpus_dir, const BenchOptions& opts,
                      std::ostream* log = nullptr);

std::string bench_csv(const std::vector<BenchRow>& rows);

/// Sidecar with one ThresholdReport per (image, channel, stage).
std::string threshold_csv(const std::vector<std::pair<std::string, StageThreshold>>& rows);

}  // namespace srwave
