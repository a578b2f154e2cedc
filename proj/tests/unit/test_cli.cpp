#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "srwave/bench.hpp"
#include "srwave/pipeline.hpp"
#include "srwave/pnm.hpp"

using namespace srwave;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "srwave");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  explicit TempDir(const std::string& name)
      : path_(fs::temp_directory_path() / ("srwave_cli_" + name)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& f) const { return path_ / f; }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// Drops the trailing runtime column.
std::string without_runtime(const std::string& csv) {
  std::string out;
  for (const auto& l : lines(csv)) out += l.substr(0, l.rfind(',')) + "\n";
  return out;
}

Image camera() { return load_pnm(fs::path(SRWAVE_TEST_DATA_DIR) / "camera256.pgm"); }

}  // namespace

TEST_CASE("sr doubles the input size") {
  TempDir dir("sr");
  SrConfig cfg;
  save_pnm(simulate_lr(camera(), cfg), dir / "lr.pgm");
  const auto r = run({"sr", (dir / "lr.pgm").string(), (dir / "out.pgm").string(), "--scale", "2",
                      "--iterations", "3"});
  CHECK(r.code == 0);
  const auto out = load_pnm(dir / "out.pgm");
  CHECK(out.width() == 256);
  CHECK(out.height() == 256);
}

TEST_CASE("sr --iterations 0 writes the filtered wavelet upsample") {
  TempDir dir("sr0");
  const Image lr({bicubic_resize(camera().plane(0), 64, 64, ResampleVariant::standard())});
  save_pnm(lr, dir / "lr.pgm");
  const Image lr8 = load_pnm(dir / "lr.pgm");
  REQUIRE(run({"sr", (dir / "lr.pgm").string(), (dir / "out.pgm").string(), "--iterations", "0"})
              .code == 0);
  SrConfig cfg;
  const auto expect = gaussian_psf(wavelet_upsample_2x(lr8.plane(0), cfg), 1.0, 5);
  CHECK(load_pnm(dir / "out.pgm") == quantize(Image({expect})));
}

TEST_CASE("--no-denoise changes the output only when the threshold is positive") {
  TempDir dir("denoise");
  save_pnm(simulate_lr(camera(), SrConfig{}), dir / "lr.pgm");
  save_pnm(Image({ImagePlane(32, 32, 90.0)}), dir / "flat.pgm");
  for (const char* name : {"lr", "flat"}) {
    const std::string in = (dir / (std::string(name) + ".pgm")).string();
    REQUIRE(run({"sr", in, (dir / "a.pgm").string()}).code == 0);
    REQUIRE(run({"sr", in, (dir / "b.pgm").string(), "--no-denoise"}).code == 0);
    ThresholdReport t;
    SrConfig cfg;
    wavelet_upsample_2x(load_pnm(in).plane(0), cfg, &t);
    const bool differ = slurp(dir / "a.pgm") != slurp(dir / "b.pgm");
    CHECK(differ == (t.threshold > 0.0));
  }
}

TEST_CASE("sr --verbose prints the iteration trace") {
  TempDir dir("verbose");
  save_pnm(Image({ImagePlane(16, 16, 10.0)}), dir / "lr.pgm");
  const auto r = run({"sr", (dir / "lr.pgm").string(), (dir / "o.pgm").string(), "-v"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() >= 4);
  CHECK(l[0] == "iteration,rms_error,psnr_if_available");
  CHECK(l[1].rfind("1,", 0) == 0);
  CHECK(l[3].rfind("3,", 0) == 0);
}

TEST_CASE("sr baselines via --method") {
  TempDir dir("method");
  save_pnm(Image({ImagePlane(8, 8, 33.0)}), dir / "lr.pgm");
  for (const char* m : {"bicubic", "wzp"}) {
    REQUIRE(run({"sr", (dir / "lr.pgm").string(), (dir / "o.pgm").string(), "--method", m}).code == 0);
    CHECK(load_pnm(dir / "o.pgm") == Image({ImagePlane(16, 16, 33.0)}));
  }
}

TEST_CASE("bench on a constant image reports inf for every method") {
  TempDir dir("bench_const");
  fs::create_directories(dir / "corpus");
  save_pnm(Image({ImagePlane(32, 32, 128.0), ImagePlane(32, 32, 128.0), ImagePlane(32, 32, 128.0)}),
           dir / "corpus/flat.ppm");
  const auto r = run({"bench", (dir / "corpus").string(), (dir / "r.csv").string()});
  CHECK(r.code == 0);
  const auto l = lines(slurp(dir / "r.csv"));
  REQUIRE(l.size() == 4);
  CHECK(l[0] == kBenchCsvHeader);
  CHECK(l[1].rfind("flat,bicubic,2,0,inf,", 0) == 0);
  CHECK(l[2].rfind("flat,proposed,2,3,inf,", 0) == 0);
  CHECK(l[3].rfind("flat,wzp,2,0,inf,", 0) == 0);
}

TEST_CASE("bench row count, ordering and determinism") {
  TempDir dir("bench12");
  fs::create_directories(dir / "corpus");
  const Image cam = camera();
  for (int i = 0; i < 12; ++i) {
    // Distinct 32x32 crops, written in reverse name order.
    ImagePlane crop(32, 32);
    for (int y = 0; y < 32; ++y)
      for (int x = 0; x < 32; ++x) crop(x, y) = cam.plane(0)(x + 16 * i, y + 8 * i);
    char name[32];
    std::snprintf(name, sizeof name, "img%02d.pgm", 11 - i);
    save_pnm(Image({crop}), dir / ("corpus/" + std::string(name)));
  }
  REQUIRE(run({"bench", (dir / "corpus").string(), (dir / "a.csv").string()}).code == 0);
  REQUIRE(run({"bench", (dir / "corpus").string(), (dir / "b.csv").string()}).code == 0);
  const auto a = slurp(dir / "a.csv");
  const auto rows = lines(a);
  CHECK(rows.size() == 37);
  CHECK(rows[1].rfind("img00,bicubic,", 0) == 0);
  CHECK(rows[36].rfind("img11,wzp,", 0) == 0);
  CHECK(without_runtime(a) == without_runtime(slurp(dir / "b.csv")));
}

TEST_CASE("bench skips bad files and fails on an empty corpus") {
  TempDir dir("bench_bad");
  fs::create_directories(dir / "corpus");
  fs::create_directories(dir / "empty");
  save_pnm(Image({ImagePlane(16, 16, 5.0)}), dir / "corpus/good.pgm");
  save_pnm(Image({ImagePlane(18, 16, 5.0)}), dir / "corpus/odd.pgm");  // 18 % 4 != 0
  std::ofstream(dir / "corpus/broken.pgm") << "P2\n1 1\n255\n0\n";

  const auto r = run({"bench", (dir / "corpus").string(), (dir / "r.csv").string(), "--verbose"});
  CHECK(r.code == 0);
  CHECK(r.err.find("broken") != std::string::npos);
  CHECK(r.err.find("odd") != std::string::npos);
  CHECK(lines(slurp(dir / "r.csv")).size() == 4);
  CHECK(fs::exists(dir / "r.csv.thresholds.csv"));

  CHECK(run({"bench", (dir / "empty").string(), (dir / "e.csv").string()}).code != 0);
  CHECK(run({"bench", (dir / "missing").string(), (dir / "e.csv").string()}).code == cli::kIo);
}

TEST_CASE("psnr subcommand") {
  TempDir dir("psnr");
  save_pnm(Image({ImagePlane(1, 1, 10.0)}), dir / "a.pgm");
  save_pnm(Image({ImagePlane(1, 1, 13.0)}), dir / "b.pgm");
  save_pnm(load_pnm(dir / "a.pgm"), dir / "a2.pgm");
  save_pnm(Image({ImagePlane(2, 1, 0.0)}), dir / "wide.pgm");

  auto r = run({"psnr", (dir / "a.pgm").string(), (dir / "a.pgm").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("psnr_db: inf") != std::string::npos);
  r = run({"psnr", (dir / "a.pgm").string(), (dir / "a2.pgm").string()});
  CHECK(r.out.find("psnr_db: inf") != std::string::npos);
  r = run({"psnr", (dir / "a.pgm").string(), (dir / "b.pgm").string()});
  CHECK(r.out == "psnr_db: 38.5884\nmse: 9.000000\n");
  CHECK(run({"psnr", (dir / "a.pgm").string(), (dir / "wide.pgm").string()}).code == cli::kShape);
}

TEST_CASE("exit codes") {
  TempDir dir("codes");
  save_pnm(Image({ImagePlane(5, 4, 1.0)}), dir / "odd.pgm");
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"sr", "only-one-arg"}).code == cli::kUsage);
  CHECK(run({"sr", "a", "b", "--scale", "3"}).code == cli::kUsage);
  CHECK(run({"sr", (dir / "odd.pgm").string(), (dir / "o.pgm").string(), "--psf-size", "4"}).code ==
        cli::kUsage);
  CHECK(run({"sr", (dir / "nope.pgm").string(), (dir / "o.pgm").string()}).code == cli::kIo);
  CHECK(run({"sr", (dir / "odd.pgm").string(), (dir / "o.pgm").string()}).code == cli::kShape);
  CHECK_FALSE(fs::exists(dir / "o.pgm"));
  CHECK(run({"--help"}).code == cli::kOk);
}
