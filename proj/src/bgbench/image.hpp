#pragma once

#include <cstdint>
#include <vector>

namespace bgbench {

// Dense RGB image, channel values in [0,1], double precision throughout.
// 8-bit quantization happens only at file boundaries (png_io).
struct Image {
    int height = 0;
    int width = 0;
    std::vector<double> data;  // row-major, interleaved r,g,b

    Image() = default;
    Image(int h, int w, double fill = 0.0);

    double& at(int r, int c, int ch) { return data[(static_cast<size_t>(r) * width + c) * 3 + ch]; }
    double at(int r, int c, int ch) const { return data[(static_cast<size_t>(r) * width + c) * 3 + ch]; }

    size_t pixel_count() const { return static_cast<size_t>(height) * width; }
    void validate() const;  // throws if dims or value range are off
};

// Soft foreground mask, values in [0,1], 1 = foreground.
struct Mask {
    int height = 0;
    int width = 0;
    std::vector<double> values;  // row-major

    Mask() = default;
    Mask(int h, int w, double fill = 0.0);

    double& at(int r, int c) { return values[static_cast<size_t>(r) * width + c]; }
    double at(int r, int c) const { return values[static_cast<size_t>(r) * width + c]; }

    size_t pixel_count() const { return static_cast<size_t>(height) * width; }
    void validate() const;
};

// Hard 0/1 view of a mask, used where the math needs a crisp foreground
// (overlap, foreground fraction).
struct BinaryMask {
    int height = 0;
    int width = 0;
    std::vector<uint8_t> bits;  // row-major, each 0 or 1

    BinaryMask() = default;
    BinaryMask(int h, int w, uint8_t fill = 0);

    uint8_t& at(int r, int c) { return bits[static_cast<size_t>(r) * width + c]; }
    uint8_t at(int r, int c) const { return bits[static_cast<size_t>(r) * width + c]; }

    size_t pixel_count() const { return static_cast<size_t>(height) * width; }
    size_t foreground_count() const;

    Mask as_mask() const;
};

// out(i,j,c) = M(i,j)*I(i,j,c) + (1-M(i,j))*B(i,j,c).
// Exact where it matters: M==1 returns the image pixel, M==0 the background
// pixel, and identical image/background pixels pass through unchanged.
Image composite(const Image& image, const Mask& mask, const Image& background);

// "Cover" fit: scale uniformly (bilinear) so both dims reach the target,
// then center-crop to exactly target_h x target_w.
Image fit_background(const Image& background, int target_h, int target_w);

// bit = 1 iff value >= threshold.
BinaryMask binarize(const Mask& mask, double threshold);

// Fraction of ground-truth foreground covered by the generated mask.
// False positives are ignored by design. Throws if truth has no foreground.
double overlap(const BinaryMask& generated, const BinaryMask& ground_truth);

}  // namespace bgbench
