#include "srwave/wavelet.hpp"

#include <cmath>
#include <string>

#include "srwave/error.hpp"

namespace srwave {

FilterPair FilterPair::haar() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{s, s}, {s, -s}};
}

namespace {

void require_even(const ImagePlane& plane, const char* op) {
  if (plane.empty() || plane.width() < 2 || plane.height() < 2 || plane.width() % 2 != 0 ||
      plane.height() % 2 != 0) {
    throw ShapeError(std::string(op) + ": dimensions must be even and >= 2, got " +
                     std::to_string(plane.width()) + "x" + std::to_string(plane.height()));
  }
}

int wrap(int i, int n) noexcept { return i >= n ? i % n : i; }

// Filters along x with output step `stride` (2 = decimated, 1 = stationary).
template <int Stride>
void analyze_rows(const ImagePlane& in, const FilterPair& f, ImagePlane& low, ImagePlane& high) {
  const int w = in.width();
  const int taps = static_cast<int>(f.lowpass.size());
  for (int y = 0; y < in.height(); ++y) {
    const auto src = in.row(y);
    auto lo = low.row(y);
    auto hi = high.row(y);
    for (int k = 0; k < low.width(); ++k) {
      double a = 0.0;
      double d = 0.0;
      for (int t = 0; t < taps; ++t) {
        const double v = src[wrap(Stride * k + t, w)];
        a += f.lowpass[t] * v;
        d += f.highpass[t] * v;
      }
      lo[k] = a;
      hi[k] = d;
    }
  }
}

template <int Stride>
void analyze_cols(const ImagePlane& in, const FilterPair& f, ImagePlane& low, ImagePlane& high) {
  const int h = in.height();
  const int taps = static_cast<int>(f.lowpass.size());
  for (int k = 0; k < low.height(); ++k) {
    for (int x = 0; x < in.width(); ++x) {
      double a = 0.0;
      double d = 0.0;
      for (int t = 0; t < taps; ++t) {
        const double v = in(x, wrap(Stride * k + t, h));
        a += f.lowpass[t] * v;
        d += f.highpass[t] * v;
      }
      low(x, k) = a;
      high(x, k) = d;
    }
  }
}

template <int Stride>
SubBands analyze(const ImagePlane& plane, const FilterPair& f) {
  const int bw = plane.width() / Stride;
  const int bh = plane.height() / Stride;
  ImagePlane low(bw, plane.height());
  ImagePlane high(bw, plane.height());
  analyze_rows<Stride>(plane, f, low, high);

  SubBands out{ImagePlane(bw, bh), ImagePlane(bw, bh), ImagePlane(bw, bh), ImagePlane(bw, bh),
               Stride == 2};
  analyze_cols<Stride>(low, f, out.ll, out.lh);
  analyze_cols<Stride>(high, f, out.hl, out.hh);
  return out;
}

}  // namespace

SubBands dwt2(const ImagePlane& plane, const FilterPair& filters) {
  require_even(plane, "dwt2");
  return analyze<2>(plane, filters);
}

SubBands swt2(const ImagePlane& plane, const FilterPair& filters) {
  require_even(plane, "swt2");
  return analyze<1>(plane, filters);
}

ImagePlane idwt2(const SubBands& b, const FilterPair& f) {
  if (!b.decimated) throw ShapeError("idwt2: stationary sub-bands cannot be synthesized here");
  if (b.ll.empty() || !b.ll.same_shape(b.lh) || !b.ll.same_shape(b.hl) ||
      !b.ll.same_shape(b.hh)) {
    throw ShapeError("idwt2: sub-band dimensions differ");
  }
  const int bw = b.ll.width();
  const int bh = b.ll.height();
  const int w = 2 * bw;
  const int h = 2 * bh;
  const int taps = static_cast<int>(f.lowpass.size());

  // Columns: (ll, lh) -> low, (hl, hh) -> high, each bw x h.
  ImagePlane low(bw, h);
  ImagePlane high(bw, h);
  for (int j = 0; j < bh; ++j) {
    for (int t = 0; t < taps; ++t) {
      const int y = wrap(2 * j + t, h);
      for (int x = 0; x < bw; ++x) {
        low(x, y) += f.lowpass[t] * b.ll(x, j) + f.highpass[t] * b.lh(x, j);
        high(x, y) += f.lowpass[t] * b.hl(x, j) + f.highpass[t] * b.hh(x, j);
      }
    }
  }

  ImagePlane out(w, h);
  for (int y = 0; y < h; ++y) {
    const auto lo = low.row(y);
    const auto hi = high.row(y);
    auto dst = out.row(y);
    for (int k = 0; k < bw; ++k) {
      for (int t = 0; t < taps; ++t) {
        dst[wrap(2 * k + t, w)] += f.lowpass[t] * lo[k] + f.highpass[t] * hi[k];
      }
    }
  }
  return out;
}

SubBands dwt2_haar(const ImagePlane& plane) { return dwt2(plane, FilterPair::haar()); }

ImagePlane idwt2_haar(const SubBands& bands) { return idwt2(bands, FilterPair::haar()); }

SubBands swt2_haar(const ImagePlane& plane) { return swt2(plane, FilterPair::haar()); }

ImagePlane wzp_upscale(const ImagePlane& plane, double ll_scale) {
  if (plane.empty()) throw ShapeError("wzp_upscale: empty plane");
  const ImagePlane zero(plane.width(), plane.height());
  return idwt2_haar(SubBands{plane_scale(plane, ll_scale), zero, zero, zero, true});
}

}  // namespace srwave
