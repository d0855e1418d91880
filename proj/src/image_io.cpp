#include "fmd/image_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fmd {
namespace {

static_assert(std::endian::native == std::endian::little,
              "FMDF I/O assumes a little-endian host");

[[noreturn]] void fail_at(const std::string& what, std::streamoff offset) {
    std::ostringstream msg;
    msg << what << " (byte offset " << offset << ")";
    throw std::runtime_error(msg.str());
}

// Netpbm header tokens: whitespace separated, '#' starts a comment line.
std::string next_token(std::istream& in) {
    std::string tok;
    int ch = in.get();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = in.get();
        } else if (std::isspace(ch)) {
            ch = in.get();
        } else {
            break;
        }
    }
    if (ch == EOF) fail_at("malformed header: unexpected end of file", in.tellg());
    while (ch != EOF && !std::isspace(ch)) {
        tok.push_back(static_cast<char>(ch));
        ch = in.get();
    }
    return tok;
}

int parse_dim(std::istream& in, const char* name) {
    const std::streamoff off = in.tellg();
    const std::string tok = next_token(in);
    try {
        const long v = std::stol(tok);
        if (v < 1 || v > 1 << 20) throw std::out_of_range(name);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        fail_at(std::string("malformed header: bad ") + name + " '" + tok + "'", off);
    }
}

Image read_pnm(std::istream& in, int channels) {
    const int width = parse_dim(in, "width");
    const int height = parse_dim(in, "height");
    const std::streamoff maxval_off = in.tellg();
    const std::string maxval_tok = next_token(in);
    long maxval = 0;
    try {
        maxval = std::stol(maxval_tok);
    } catch (const std::exception&) {
        fail_at("malformed header: bad maxval '" + maxval_tok + "'", maxval_off);
    }
    if (maxval != 255 && maxval != 65535)
        fail_at("unsupported maxval " + std::to_string(maxval) + " (expected 255 or 65535)",
                maxval_off);
    // Exactly one whitespace byte separates the header from the payload;
    // next_token has already consumed it.

    Image img(width, height, channels, static_cast<double>(maxval));
    const std::size_t n = img.sample_count();
    const int bytes_per_sample = maxval == 255 ? 1 : 2;
    std::vector<unsigned char> raw(n * bytes_per_sample);
    const std::streamoff payload_off = in.tellg();
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
        fail_at("truncated pixel payload", payload_off + in.gcount());
    if (bytes_per_sample == 1) {
        for (std::size_t i = 0; i < n; ++i) img.pixels[i] = raw[i];
    } else {
        // 16-bit samples are big-endian per Netpbm convention.
        for (std::size_t i = 0; i < n; ++i)
            img.pixels[i] = static_cast<double>((raw[2 * i] << 8) | raw[2 * i + 1]);
    }
    return img;
}

std::uint32_t read_u32(std::istream& in, const char* name) {
    std::uint32_t v = 0;
    const std::streamoff off = in.tellg();
    in.read(reinterpret_cast<char*>(&v), 4);
    if (in.gcount() != 4) fail_at(std::string("truncated FMDF header: ") + name, off);
    return v;
}

void write_u32(std::ostream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), 4);
}

int checked_dim(std::uint32_t v, const char* name, std::streamoff off) {
    if (v < 1 || v > (1u << 20)) fail_at(std::string("malformed FMDF header: bad ") + name, off);
    return static_cast<int>(v);
}

} // namespace

Image read_fmdf(std::istream& in) {
    char magic[4] = {};
    in.read(magic, 4);
    if (in.gcount() != 4 || std::memcmp(magic, "FMDF", 4) != 0)
        fail_at("malformed header: bad magic (expected FMDF)", 0);
    const std::uint32_t version = read_u32(in, "version");
    if (version != 1) fail_at("unsupported FMDF version " + std::to_string(version), 4);
    const int width = checked_dim(read_u32(in, "width"), "width", 8);
    const int height = checked_dim(read_u32(in, "height"), "height", 12);
    const std::uint32_t channels = read_u32(in, "channels");
    if (channels != 1 && channels != 3) fail_at("malformed FMDF header: bad channels", 16);
    double peak = 0.0;
    in.read(reinterpret_cast<char*>(&peak), 8);
    if (in.gcount() != 8) fail_at("truncated FMDF header: peak", 20);
    if (!(peak > 0.0) || !std::isfinite(peak)) fail_at("malformed FMDF header: bad peak", 20);

    Image img(width, height, static_cast<int>(channels), peak);
    const std::streamsize payload = static_cast<std::streamsize>(img.sample_count() * 8);
    in.read(reinterpret_cast<char*>(img.pixels.data()), payload);
    if (in.gcount() != payload) fail_at("truncated pixel payload", 28 + in.gcount());
    img.validate();
    return img;
}

void write_fmdf(const Image& image, std::ostream& out) {
    image.validate();
    out.write("FMDF", 4);
    write_u32(out, 1);
    write_u32(out, static_cast<std::uint32_t>(image.width));
    write_u32(out, static_cast<std::uint32_t>(image.height));
    write_u32(out, static_cast<std::uint32_t>(image.channels));
    out.write(reinterpret_cast<const char*>(&image.peak), 8);
    out.write(reinterpret_cast<const char*>(image.pixels.data()),
              static_cast<std::streamsize>(image.sample_count() * 8));
}

Image read_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    char magic[2] = {};
    in.read(magic, 2);
    if (in.gcount() != 2) fail_at("malformed header: file shorter than magic", 0);
    in.seekg(0);
    try {
        if (magic[0] == 'P' && magic[1] == '5') {
            in.ignore(2);
            return read_pnm(in, 1);
        }
        if (magic[0] == 'P' && magic[1] == '6') {
            in.ignore(2);
            return read_pnm(in, 3);
        }
        if (magic[0] == 'F' && magic[1] == 'M') {
            return read_fmdf(in);
        }
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    throw std::runtime_error(path.string() + ": unrecognized format magic (byte offset 0)");
}

void write_image(const Image& image, const std::filesystem::path& path, ImageFormat format) {
    image.validate();
    if (format != ImageFormat::FMDF && image.channels != 1)
        throw std::invalid_argument("PGM output requires a single-channel image");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");

    if (format == ImageFormat::FMDF) {
        write_fmdf(image, out);
    } else {
        const long maxval = format == ImageFormat::PGM8 ? 255 : 65535;
        out << "P5\n" << image.width << " " << image.height << "\n" << maxval << "\n";
        const std::size_t n = image.sample_count();
        std::vector<unsigned char> raw(n * (maxval == 255 ? 1 : 2));
        for (std::size_t i = 0; i < n; ++i) {
            double v = image.pixels[i];
            if (v < 0.0 || v > image.peak)
                throw std::invalid_argument("PGM output requires samples in [0, peak]");
            // round half away from zero, clamp to format max
            long q = static_cast<long>(std::llround(v));
            if (q > maxval) q = maxval;
            if (q < 0) q = 0;
            if (maxval == 255) {
                raw[i] = static_cast<unsigned char>(q);
            } else {
                raw[2 * i] = static_cast<unsigned char>(q >> 8);
                raw[2 * i + 1] = static_cast<unsigned char>(q & 0xFF);
            }
        }
        out.write(reinterpret_cast<const char*>(raw.data()),
                  static_cast<std::streamsize>(raw.size()));
    }
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace fmd
