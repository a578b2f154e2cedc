#include "srwave/pnm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "srwave/error.hpp"

namespace srwave {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments (which run to end of line).
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long read_uint(const char* what) {
    skip_separators();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw FormatError(std::string("PNM header: expected ") + what);
    }
    long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > (1L << 24)) throw FormatError(std::string("PNM header: ") + what + " too large");
      ++pos_;
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void expect_single_whitespace() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw FormatError("PNM header: missing whitespace before raster");
    }
    ++pos_;
  }

  std::size_t position() const noexcept { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image decode_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
    throw FormatError("not a binary PGM/PPM file (expected magic P5 or P6)");
  }
  const int channels = bytes[1] == '5' ? 1 : 3;
  HeaderReader reader(bytes.subspan(2));
  const long width = reader.read_uint("width");
  const long height = reader.read_uint("height");
  const long maxval = reader.read_uint("maxval");
  reader.expect_single_whitespace();
  if (width <= 0 || height <= 0) throw FormatError("PNM header: zero dimension");
  if (maxval != 255) {
    throw UnsupportedDepthError("unsupported PNM maxval " + std::to_string(maxval) +
                                " (only 8-bit, maxval 255, is supported)");
  }

  const std::size_t offset = 2 + reader.position();
  const std::size_t pixels = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const std::size_t need = pixels * channels;
  if (bytes.size() - offset < need) {
    throw IoError("truncated PNM raster: expected " + std::to_string(need) + " bytes, got " +
                  std::to_string(bytes.size() - offset));
  }

  std::vector<std::vector<double>> samples(channels, std::vector<double>(pixels));
  const auto* raster = bytes.data() + offset;
  for (std::size_t i = 0; i < pixels; ++i)
    for (int c = 0; c < channels; ++c) samples[c][i] = raster[i * channels + c];

  std::vector<ImagePlane> planes;
  planes.reserve(channels);
  for (auto& s : samples)
    planes.emplace_back(static_cast<int>(width), static_cast<int>(height), std::move(s));
  return Image(std::move(planes), static_cast<int>(maxval));
}

std::vector<std::uint8_t> encode_pnm(const Image& img) {
  const int channels = img.channels();
  if (channels != 1 && channels != 3) throw ShapeError("PNM output needs 1 or 3 planes");
  const std::string header = std::string(channels == 1 ? "P5" : "P6") + "\n" +
                             std::to_string(img.width()) + " " + std::to_string(img.height()) +
                             "\n255\n";
  const std::size_t pixels = static_cast<std::size_t>(img.width()) * img.height();
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + pixels * channels);
  for (std::size_t i = 0; i < pixels; ++i)
    for (int c = 0; c < channels; ++c)
      out.push_back(static_cast<std::uint8_t>(quantize_sample(img.plane(c).samples()[i], 255)));
  return out;
}

Image load_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return decode_pnm(bytes);
}

void save_pnm(const Image& img, const std::filesystem::path& path) {
  const auto bytes = encode_pnm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace srwave
