#pragma once

#include <vector>

#include "srwave/image.hpp"

namespace srwave {

/// Orthogonal two-channel analysis filter bank. Synthesis uses the
/// transposed (time-reversed) filters, so perfect reconstruction holds for
/// any orthonormal pair. Only Haar ships.
struct FilterPair {
  std::vector<double> lowpass;
  std::vector<double> highpass;

  static FilterPair haar();
};

/// One-level 2D decomposition.
///
/// Naming follows the filter applied down the columns first: `lh` is
/// lowpass along x and highpass along y, `hl` is highpass along x and
/// lowpass along y. For a 2x2 block [[a, b], [c, d]] with orthonormal Haar:
///   ll = (a+b+c+d)/2, hl = (a-b+c-d)/2, lh = (a+b-c-d)/2, hh = (a-b-c+d)/2.
struct SubBands {
  ImagePlane ll;
  ImagePlane lh;
  ImagePlane hl;
  ImagePlane hh;
  // true: each band is (w/2, h/2); false: stationary, source-sized bands.
  bool decimated = true;

  int width() const noexcept { return ll.width(); }
  int height() const noexcept { return ll.height(); }
};

SubBands dwt2(const ImagePlane& plane, const FilterPair& filters);
ImagePlane idwt2(const SubBands& bands, const FilterPair& filters);
SubBands swt2(const ImagePlane& plane, const FilterPair& filters);

/// Decimated 1-level orthonormal Haar analysis, periodic boundary.
SubBands dwt2_haar(const ImagePlane& plane);

/// Exact inverse of dwt2_haar.
ImagePlane idwt2_haar(const SubBands& bands);

/// Undecimated (a trous, level 1) Haar analysis with the same filters as
/// dwt2_haar: band(2i, 2j) == dwt2_haar band(i, j).
SubBands swt2_haar(const ImagePlane& plane);

/// Wavelet zero-padding: idwt2_haar(ll_scale * plane, 0, 0, 0). Doubles
/// both dimensions.
ImagePlane wzp_upscale(const ImagePlane& plane, double ll_scale = 2.0);

}  // namespace srwave
