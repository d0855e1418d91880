#pragma once

#include <filesystem>
#include <iosfwd>

#include "fmd/image.hpp"

namespace fmd {

enum class ImageFormat { PGM8, PGM16, FMDF };

/// Reads PGM/PPM binary (P5/P6, maxval 255 or 65535) or FMDF. The format
/// is detected from the magic bytes. Malformed input is reported with the
/// byte offset of the failure.
Image read_image(const std::filesystem::path& path);

/// Writes the image in the requested format. PGM formats require a single
/// channel and samples in [0, peak]; samples are rounded half away from
/// zero and clamped to the format maximum. FMDF is a bit-exact float64
/// container (see read_fmdf/write_fmdf).
void write_image(const Image& image, const std::filesystem::path& path, ImageFormat format);

/// FMDF wire format, little-endian:
///   "FMDF" | u32 version=1 | u32 width | u32 height | u32 channels |
///   f64 peak | width*height*channels f64 samples (row-major, interleaved)
Image read_fmdf(std::istream& in);
void write_fmdf(const Image& image, std::ostream& out);

} // namespace fmd
