#pragma once

#include <cstdint>
#include <filesystem>

#include "bgbench/image.hpp"

namespace bgbench {

// 8-bit PNG at the file boundary; byte v maps to v/255 and back with
// round-half-up. Masks are single-channel grayscale, 255 = foreground.

uint8_t quantize8(double v);             // round-half-up, clamped to [0,255]
double dequantize8(uint8_t v);           // v / 255

Image load_image_png(const std::filesystem::path& path);
Mask load_mask_png(const std::filesystem::path& path);

void save_image_png(const std::filesystem::path& path, const Image& image);
void save_mask_png(const std::filesystem::path& path, const Mask& mask);

}  // namespace bgbench
