#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "srwave/image.hpp"

namespace srwave {

// Binary 8-bit PGM (P5) / PPM (P6). Samples are stored as the raw byte
// values, no scaling.
Image decode_pnm(std::span<const std::uint8_t> bytes);

// Writes the canonical header "P5\n<w> <h>\n255\n" (P6 for 3 planes)
// followed by clamped, half-away-from-zero rounded bytes.
std::vector<std::uint8_t> encode_pnm(const Image& img);

Image load_pnm(const std::filesystem::path& path);
void save_pnm(const Image& img, const std::filesystem::path& path);

}  // namespace srwave
