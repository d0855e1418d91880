#pragma once

#include <cstddef>
#include <vector>

namespace fmd {

/// 2-D raster in detector units. Row-major, channel-interleaved, always
/// double precision regardless of the source bit depth. Immutable by
/// convention once constructed; all operations return new images.
struct Image {
    int width = 0;
    int height = 0;
    int channels = 1;
    double peak = 255.0; // maximum representable detector value
    std::vector<double> pixels;

    Image() = default;
    Image(int w, int h, int ch, double pk);

    [[nodiscard]] std::size_t sample_count() const {
        return static_cast<std::size_t>(width) * height * channels;
    }
    [[nodiscard]] double& at(int x, int y, int c = 0) {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    [[nodiscard]] double at(int x, int y, int c = 0) const {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }

    [[nodiscard]] bool same_shape(const Image& other) const {
        return width == other.width && height == other.height && channels == other.channels;
    }

    /// Throws if any invariant is violated (empty raster, non-finite
    /// samples, peak <= 0, size mismatch).
    void validate() const;
};

struct Rect {
    int x0 = 0;
    int y0 = 0;
    int w = 0;
    int h = 0;
};

/// Extracts the rectangle; pixel (i,j) of the result equals source pixel
/// (x0+i, y0+j). Peak and channel count are preserved.
Image crop(const Image& image, const Rect& rect);

/// Tiles the image into patch x patch blocks in row-major tile order.
/// Width and height must both be divisible by patch.
std::vector<Image> split_patches(const Image& image, int patch);

/// Single-channel view of channel c as a new image.
Image extract_channel(const Image& image, int c);

/// Writes a single-channel raster back into channel c of dst.
void insert_channel(Image& dst, const Image& src, int c);

} // namespace fmd
