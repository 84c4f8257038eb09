#include "bgbench/image.hpp"

#include <algorithm>
#include <cmath>

#include "bgbench/error.hpp"

namespace bgbench {

Image::Image(int h, int w, double fill)
    : height(h), width(w), data(static_cast<size_t>(h) * w * 3, fill) {}

void Image::validate() const {
    require(height >= 1 && width >= 1, "image dimensions must be at least 1x1");
    require(data.size() == pixel_count() * 3, "image buffer size does not match dimensions");
    for (double v : data) {
        require(std::isfinite(v) && v >= 0.0 && v <= 1.0,
                "image channel value outside [0,1]");
    }
}

Mask::Mask(int h, int w, double fill)
    : height(h), width(w), values(static_cast<size_t>(h) * w, fill) {}

void Mask::validate() const {
    require(height >= 1 && width >= 1, "mask dimensions must be at least 1x1");
    require(values.size() == pixel_count(), "mask buffer size does not match dimensions");
    for (double v : values) {
        require(std::isfinite(v) && v >= 0.0 && v <= 1.0, "mask value outside [0,1]");
    }
}

BinaryMask::BinaryMask(int h, int w, uint8_t fill)
    : height(h), width(w), bits(static_cast<size_t>(h) * w, fill) {}

size_t BinaryMask::foreground_count() const {
    size_t n = 0;
    for (uint8_t b : bits) n += b;
    return n;
}

Mask BinaryMask::as_mask() const {
    Mask m(height, width);
    for (size_t i = 0; i < bits.size(); ++i) m.values[i] = bits[i] ? 1.0 : 0.0;
    return m;
}

namespace {

void check_dims(const char* what, int h, int w, int image_h, int image_w) {
    if (h != image_h || w != image_w) {
        std::string msg = std::string(what) + " dimensions do not match image:";
        if (h != image_h) {
            msg += " height " + std::to_string(h) + " vs " + std::to_string(image_h);
        }
        if (w != image_w) {
            msg += " width " + std::to_string(w) + " vs " + std::to_string(image_w);
        }
        throw Error(msg);
    }
}

// Blend one channel value. Branches keep the binary-mask and equal-pixel
// cases bit-exact; the general case is a convex combination so it stays
// inside [0,1] up to rounding, which the clamp absorbs.
inline double blend(double m, double i, double b) {
    if (m == 1.0) return i;
    if (m == 0.0) return b;
    if (i == b) return i;
    const double v = m * i + (1.0 - m) * b;
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace

Image composite(const Image& image, const Mask& mask, const Image& background) {
    check_dims("mask", mask.height, mask.width, image.height, image.width);
    check_dims("background", background.height, background.width, image.height, image.width);

    Image out(image.height, image.width);
    const size_t n = image.pixel_count();
    for (size_t p = 0; p < n; ++p) {
        const double m = mask.values[p];
        for (int ch = 0; ch < 3; ++ch) {
            out.data[p * 3 + ch] = blend(m, image.data[p * 3 + ch], background.data[p * 3 + ch]);
        }
    }
    return out;
}

namespace {

// Bilinear sample with the half-pixel-center convention
// (src = (dst + 0.5) * scale - 0.5), coordinates clamped to the grid.
Image resize_bilinear(const Image& src, int out_h, int out_w) {
    Image out(out_h, out_w);
    const double sy = static_cast<double>(src.height) / out_h;
    const double sx = static_cast<double>(src.width) / out_w;
    for (int r = 0; r < out_h; ++r) {
        double fy = (r + 0.5) * sy - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(src.height - 1));
        const int y0 = static_cast<int>(fy);
        const int y1 = std::min(y0 + 1, src.height - 1);
        const double wy = fy - y0;
        for (int c = 0; c < out_w; ++c) {
            double fx = (c + 0.5) * sx - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(src.width - 1));
            const int x0 = static_cast<int>(fx);
            const int x1 = std::min(x0 + 1, src.width - 1);
            const double wx = fx - x0;
            for (int ch = 0; ch < 3; ++ch) {
                const double top = src.at(y0, x0, ch) * (1.0 - wx) + src.at(y0, x1, ch) * wx;
                const double bot = src.at(y1, x0, ch) * (1.0 - wx) + src.at(y1, x1, ch) * wx;
                out.at(r, c, ch) = std::clamp(top * (1.0 - wy) + bot * wy, 0.0, 1.0);
            }
        }
    }
    return out;
}

Image center_crop(const Image& src, int target_h, int target_w) {
    const int r0 = (src.height - target_h) / 2;
    const int c0 = (src.width - target_w) / 2;
    Image out(target_h, target_w);
    for (int r = 0; r < target_h; ++r) {
        for (int c = 0; c < target_w; ++c) {
            for (int ch = 0; ch < 3; ++ch) out.at(r, c, ch) = src.at(r0 + r, c0 + c, ch);
        }
    }
    return out;
}

}  // namespace

Image fit_background(const Image& background, int target_h, int target_w) {
    require(target_h >= 1 && target_w >= 1, "fit_background target dimensions must be >= 1");
    require(background.height >= 1 && background.width >= 1,
            "fit_background needs a non-empty background");

    const double scale = std::max(static_cast<double>(target_h) / background.height,
                                  static_cast<double>(target_w) / background.width);
    int scaled_h = std::max<int>(target_h, static_cast<int>(std::llround(background.height * scale)));
    int scaled_w = std::max<int>(target_w, static_cast<int>(std::llround(background.width * scale)));

    if (scaled_h == background.height && scaled_w == background.width) {
        if (scaled_h == target_h && scaled_w == target_w) return background;
        return center_crop(background, target_h, target_w);
    }

    const Image scaled = resize_bilinear(background, scaled_h, scaled_w);
    if (scaled_h == target_h && scaled_w == target_w) return scaled;
    return center_crop(scaled, target_h, target_w);
}

BinaryMask binarize(const Mask& mask, double threshold) {
    require(threshold >= 0.0 && threshold <= 1.0, "binarize threshold must lie in [0,1]");
    BinaryMask out(mask.height, mask.width);
    for (size_t i = 0; i < mask.values.size(); ++i) {
        out.bits[i] = mask.values[i] >= threshold ? 1 : 0;
    }
    return out;
}

double overlap(const BinaryMask& generated, const BinaryMask& ground_truth) {
    check_dims("generated mask", generated.height, generated.width,
               ground_truth.height, ground_truth.width);
    size_t truth_fg = 0;
    size_t covered = 0;
    for (size_t i = 0; i < ground_truth.bits.size(); ++i) {
        if (ground_truth.bits[i]) {
            ++truth_fg;
            if (generated.bits[i]) ++covered;
        }
    }
    require(truth_fg > 0, "overlap undefined: ground-truth mask has no foreground pixels");
    return static_cast<double>(covered) / static_cast<double>(truth_fg);
}

}  // namespace bgbench
