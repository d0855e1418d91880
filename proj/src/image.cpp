#include "fmd/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fmd {

Image::Image(int w, int h, int ch, double pk)
    : width(w), height(h), channels(ch), peak(pk),
      pixels(static_cast<std::size_t>(w) * h * ch, 0.0) {
    if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be >= 1");
    if (ch != 1 && ch != 3) throw std::invalid_argument("channel count must be 1 or 3");
    if (!(pk > 0.0)) throw std::invalid_argument("peak must be positive");
}

void Image::validate() const {
    if (width < 1 || height < 1) throw std::invalid_argument("image dimensions must be >= 1");
    if (channels != 1 && channels != 3) throw std::invalid_argument("channel count must be 1 or 3");
    if (!(peak > 0.0)) throw std::invalid_argument("peak must be positive");
    if (pixels.size() != sample_count())
        throw std::invalid_argument("pixel buffer size does not match dimensions");
    for (double v : pixels) {
        if (!std::isfinite(v)) throw std::invalid_argument("image contains non-finite sample");
    }
}

Image crop(const Image& image, const Rect& rect) {
    if (rect.w < 1 || rect.h < 1) throw std::invalid_argument("crop extents must be >= 1");
    if (rect.x0 < 0 || rect.y0 < 0 || rect.x0 + rect.w > image.width ||
        rect.y0 + rect.h > image.height) {
        throw std::out_of_range("crop rectangle exceeds image bounds");
    }
    Image out(rect.w, rect.h, image.channels, image.peak);
    for (int y = 0; y < rect.h; ++y) {
        const double* src = &image.pixels[(static_cast<std::size_t>(rect.y0 + y) * image.width +
                                           rect.x0) * image.channels];
        double* dst = &out.pixels[static_cast<std::size_t>(y) * rect.w * image.channels];
        std::copy(src, src + static_cast<std::size_t>(rect.w) * image.channels, dst);
    }
    return out;
}

std::vector<Image> split_patches(const Image& image, int patch) {
    if (patch < 1) throw std::invalid_argument("patch extent must be >= 1");
    if (image.width % patch != 0 || image.height % patch != 0) {
        throw std::invalid_argument("image dimensions " + std::to_string(image.width) + "x" +
                                    std::to_string(image.height) + " not divisible by patch " +
                                    std::to_string(patch));
    }
    std::vector<Image> out;
    out.reserve(static_cast<std::size_t>(image.width / patch) * (image.height / patch));
    for (int ty = 0; ty < image.height / patch; ++ty) {
        for (int tx = 0; tx < image.width / patch; ++tx) {
            out.push_back(crop(image, Rect{tx * patch, ty * patch, patch, patch}));
        }
    }
    return out;
}

Image extract_channel(const Image& image, int c) {
    if (c < 0 || c >= image.channels) throw std::out_of_range("channel index out of range");
    Image out(image.width, image.height, 1, image.peak);
    const std::size_t n = static_cast<std::size_t>(image.width) * image.height;
    for (std::size_t i = 0; i < n; ++i) out.pixels[i] = image.pixels[i * image.channels + c];
    return out;
}

void insert_channel(Image& dst, const Image& src, int c) {
    if (c < 0 || c >= dst.channels) throw std::out_of_range("channel index out of range");
    if (src.width != dst.width || src.height != dst.height || src.channels != 1)
        throw std::invalid_argument("channel raster shape mismatch");
    const std::size_t n = static_cast<std::size_t>(dst.width) * dst.height;
    for (std::size_t i = 0; i < n; ++i) dst.pixels[i * dst.channels + c] = src.pixels[i];
}

} // namespace fmd
