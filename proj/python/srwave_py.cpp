#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <string>

#include "srwave/denoise.hpp"
#include "srwave/error.hpp"
#include "srwave/metrics.hpp"
#include "srwave/pipeline.hpp"
#include "srwave/pnm.hpp"
#include "srwave/resample.hpp"
#include "srwave/wavelet.hpp"

namespace py = pybind11;
using namespace srwave;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

ImagePlane to_plane(const Array& a) {
  if (a.ndim() != 2) throw ShapeError("expected a 2-D array (height, width)");
  const int h = static_cast<int>(a.shape(0));
  const int w = static_cast<int>(a.shape(1));
  std::vector<double> samples(a.data(), a.data() + a.size());
  return ImagePlane(w, h, std::move(samples));
}

Array from_plane(const ImagePlane& p) {
  Array out({p.height(), p.width()});
  std::memcpy(out.mutable_data(), p.samples().data(), p.size() * sizeof(double));
  return out;
}

// (h, w) -> grayscale, (h, w, 3) -> RGB.
Image to_image(const Array& a) {
  if (a.ndim() == 2) return Image({to_plane(a)});
  if (a.ndim() != 3 || (a.shape(2) != 3 && a.shape(2) != 1)) {
    throw ShapeError("expected (height, width) or (height, width, 3)");
  }
  const int h = static_cast<int>(a.shape(0));
  const int w = static_cast<int>(a.shape(1));
  const int c = static_cast<int>(a.shape(2));
  std::vector<ImagePlane> planes(c, ImagePlane(w, h));
  const double* src = a.data();
  for (int i = 0; i < w * h; ++i)
    for (int k = 0; k < c; ++k) planes[k].samples()[i] = src[i * c + k];
  return Image(std::move(planes));
}

Array from_image(const Image& img) {
  if (img.channels() == 1) return from_plane(img.plane(0));
  const int c = img.channels();
  Array out({img.height(), img.width(), c});
  double* dst = out.mutable_data();
  const std::size_t n = static_cast<std::size_t>(img.width()) * img.height();
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 0; k < c; ++k) dst[i * c + k] = img.plane(k).samples()[i];
  return out;
}

py::tuple bands_tuple(const SubBands& b) {
  return py::make_tuple(from_plane(b.ll), from_plane(b.lh), from_plane(b.hl), from_plane(b.hh));
}

}  // namespace

PYBIND11_MODULE(_srwave, m) {
  m.doc() = "Wavelet/spatial single-image super-resolution";

  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto& format = py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<UnsupportedDepthError>(m, "UnsupportedDepthError", format.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);

  py::class_<SrConfig>(m, "SrConfig")
      .def(py::init<>())
      .def_readwrite("scale", &SrConfig::scale)
      .def_readwrite("iterations", &SrConfig::iterations)
      .def_readwrite("psf_sigma", &SrConfig::psf_sigma)
      .def_readwrite("psf_size", &SrConfig::psf_size)
      .def_readwrite("denoise_enabled", &SrConfig::denoise_enabled)
      .def_readwrite("epsilon", &SrConfig::epsilon)
      .def_readwrite("ll_scale", &SrConfig::ll_scale)
      .def_readwrite("sharpen_amount", &SrConfig::sharpen_amount)
      .def_readwrite("sharpen_sigma", &SrConfig::sharpen_sigma)
      .def_property(
          "down_variant", [](const SrConfig& c) { return std::string(to_string(c.down_variant)); },
          [](SrConfig& c, const std::string& v) {
            if (v == "sharper") c.down_variant = DownVariant::bicubic_sharper;
            else if (v == "block") c.down_variant = DownVariant::block_2x2;
            else throw ParameterError("down_variant must be 'sharper' or 'block'");
          })
      .def("validate", &SrConfig::validate);

  py::class_<ThresholdReport>(m, "ThresholdReport")
      .def_readonly("sigma", &ThresholdReport::sigma)
      .def_readonly("harmonic_mean", &ThresholdReport::harmonic_mean)
      .def_readonly("geometric_mean", &ThresholdReport::geometric_mean)
      .def_readonly("threshold", &ThresholdReport::threshold);

  m.def("load_pnm", [](const std::string& path) { return from_image(load_pnm(path)); });
  m.def("save_pnm",
        [](const Array& img, const std::string& path) { save_pnm(to_image(img), path); });

  m.def("dwt2_haar", [](const Array& a) { return bands_tuple(dwt2_haar(to_plane(a))); },
        "Returns (ll, lh, hl, hh).");
  m.def("swt2_haar", [](const Array& a) { return bands_tuple(swt2_haar(to_plane(a))); });
  m.def("idwt2_haar", [](const Array& ll, const Array& lh, const Array& hl, const Array& hh) {
    return from_plane(idwt2_haar({to_plane(ll), to_plane(lh), to_plane(hl), to_plane(hh), true}));
  });
  m.def("wzp_upscale",
        [](const Array& a, double ll_scale) { return from_plane(wzp_upscale(to_plane(a), ll_scale)); },
        py::arg("plane"), py::arg("ll_scale") = 2.0);

  m.def(
      "bicubic_resize",
      [](const Array& a, int out_w, int out_h, const std::string& variant) {
        ResampleVariant v = ResampleVariant::standard();
        if (variant == "smoother") v = ResampleVariant::smoother();
        else if (variant == "sharper") v = ResampleVariant::sharper();
        else if (variant != "standard") throw ParameterError("unknown variant " + variant);
        return from_plane(bicubic_resize(to_plane(a), out_w, out_h, v));
      },
      py::arg("plane"), py::arg("out_w"), py::arg("out_h"), py::arg("variant") = "standard");
  m.def("block_downsample_2x2",
        [](const Array& a) { return from_plane(block_downsample_2x2(to_plane(a))); });
  m.def("gaussian_psf", [](const Array& a, double sigma, int size) {
    return from_plane(gaussian_psf(to_plane(a), sigma, size));
  }, py::arg("plane"), py::arg("sigma") = 1.0, py::arg("size") = 5);

  m.def("mad_sigma", [](const Array& a) { return mad_sigma(to_plane(a)); });
  m.def("threshold_value", [](const Array& a, double eps) { return threshold_value(to_plane(a), eps); },
        py::arg("band"), py::arg("epsilon") = kDefaultEpsilon);
  m.def("soft_threshold",
        [](const Array& a, double t) { return from_plane(soft_threshold(to_plane(a), t)); });
  m.def("hard_threshold",
        [](const Array& a, double t) { return from_plane(hard_threshold(to_plane(a), t)); });
  m.def("denoise_hh", [](const Array& a, double eps) { return from_plane(denoise_hh(to_plane(a), eps)); },
        py::arg("band"), py::arg("epsilon") = kDefaultEpsilon);

  m.def("simulate_lr", [](const Array& hr, const SrConfig& cfg) {
    return from_image(simulate_lr(to_image(hr), cfg));
  }, py::arg("hr"), py::arg("config") = SrConfig{});
  m.def("wavelet_upsample_2x", [](const Array& lr, const SrConfig& cfg) {
    return from_plane(wavelet_upsample_2x(to_plane(lr), cfg));
  }, py::arg("lr"), py::arg("config") = SrConfig{});
  m.def(
      "super_resolve",
      [](const Array& lr, const SrConfig& cfg, std::optional<Array> truth) {
        std::optional<Image> gt;
        if (truth) gt = to_image(*truth);
        const Image input = to_image(lr);
        SrResult r;
        {
          py::gil_scoped_release release;
          r = super_resolve(input, cfg, gt);
        }
        py::list trace;
        for (const auto& s : r.trace.steps) {
          py::dict d;
          d["iteration"] = s.iteration;
          d["rms_error"] = s.rms_error;
          d["psnr_db"] = s.psnr_db ? py::cast(*s.psnr_db) : py::none();
          trace.append(d);
        }
        return py::make_tuple(from_image(r.image), trace);
      },
      py::arg("lr"), py::arg("config") = SrConfig{}, py::arg("ground_truth") = py::none(),
      "Returns (image, trace) where trace is a list of per-iteration dicts.");
  m.def("bicubic_sr_baseline", [](const Array& lr, int scale) {
    return from_image(bicubic_sr_baseline(to_image(lr), scale));
  }, py::arg("lr"), py::arg("scale") = 2);
  m.def("wzp_sr_baseline", [](const Array& lr, int scale, double ll_scale) {
    return from_image(wzp_sr_baseline(to_image(lr), scale, ll_scale));
  }, py::arg("lr"), py::arg("scale") = 2, py::arg("ll_scale") = 2.0);

  m.def("mse", [](const Array& a, const Array& b) { return mse(to_image(a), to_image(b)); });
  m.def("psnr", [](const Array& a, const Array& b, bool luma_only) {
    return psnr(to_image(a), to_image(b), luma_only).psnr_db;
  }, py::arg("a"), py::arg("b"), py::arg("luma_only") = false);
}
