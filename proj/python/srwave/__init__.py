"""Wavelet/spatial single-image super-resolution (C++ core)."""

from ._srwave import (
    Error,
    FormatError,
    IoError,
    ParameterError,
    ShapeError,
    UnsupportedDepthError,
    SrConfig,
    ThresholdReport,
    bicubic_resize,
    bicubic_sr_baseline,
    block_downsample_2x2,
    denoise_hh,
    dwt2_haar,
    gaussian_psf,
    hard_threshold,
    idwt2_haar,
    load_pnm,
    mad_sigma,
    mse,
    psnr,
    save_pnm,
    simulate_lr,
    soft_threshold,
    super_resolve,
    swt2_haar,
    threshold_value,
    wavelet_upsample_2x,
    wzp_sr_baseline,
    wzp_upscale,
)

__all__ = [name for name in dir() if not name.startswith("_")]
