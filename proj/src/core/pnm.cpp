#include "rliac/core/pnm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace rliac {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    return f;
}

void write_header(std::ofstream& f, const char* magic, int w, int h, int maxval) {
    f << magic << "\n" << w << " " << h << "\n" << maxval << "\n";
}

struct PnmHeader {
    std::string magic;
    int w = 0, h = 0, maxval = 0;
};

PnmHeader read_header(std::ifstream& f, const std::string& path) {
    PnmHeader hdr;
    f >> hdr.magic;
    auto next_int = [&](int& out) {
        // Skip whitespace and '#' comment lines between header tokens.
        int c = f.peek();
        while (c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '#') {
            if (c == '#') {
                std::string line;
                std::getline(f, line);
            } else {
                f.get();
            }
            c = f.peek();
        }
        f >> out;
    };
    next_int(hdr.w);
    next_int(hdr.h);
    next_int(hdr.maxval);
    f.get();  // single whitespace before raster
    if (!f || hdr.w <= 0 || hdr.h <= 0) throw std::runtime_error("bad PNM header: " + path);
    return hdr;
}

}  // namespace

void write_pgm8(const std::string& path, const ImageU8& img) {
    auto f = open_out(path);
    write_header(f, "P5", img.width, img.height, 255);
    f.write(reinterpret_cast<const char*>(img.data.data()), static_cast<std::streamsize>(img.data.size()));
}

void write_pgm16(const std::string& path, const ImageU16& img) {
    auto f = open_out(path);
    write_header(f, "P5", img.width, img.height, 65535);
    std::vector<unsigned char> buf(img.data.size() * 2);
    for (std::size_t i = 0; i < img.data.size(); ++i) {
        buf[2 * i] = static_cast<unsigned char>(img.data[i] >> 8);
        buf[2 * i + 1] = static_cast<unsigned char>(img.data[i] & 0xff);
    }
    f.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

void write_ppm(const std::string& path, const Image3F& img) {
    auto f = open_out(path);
    write_header(f, "P6", img.width, img.height, 255);
    std::vector<unsigned char> buf(img.pixels() * 3);
    for (std::size_t i = 0; i < img.pixels(); ++i)
        for (int c = 0; c < 3; ++c) {
            const float v = std::clamp(img.plane(c)[i], 0.f, 1.f);
            buf[3 * i + c] = static_cast<unsigned char>(std::lround(v * 255.f));
        }
    f.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

ImageU8 read_pgm8(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    const auto hdr = read_header(f, path);
    if (hdr.magic != "P5" || hdr.maxval != 255) throw std::runtime_error("expected 8-bit P5: " + path);
    ImageU8 img(hdr.w, hdr.h);
    f.read(reinterpret_cast<char*>(img.data.data()), static_cast<std::streamsize>(img.data.size()));
    if (!f) throw std::runtime_error("truncated PGM: " + path);
    return img;
}

ImageU16 read_pgm16(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    const auto hdr = read_header(f, path);
    if (hdr.magic != "P5" || hdr.maxval != 65535) throw std::runtime_error("expected 16-bit P5: " + path);
    ImageU16 img(hdr.w, hdr.h);
    std::vector<unsigned char> buf(img.data.size() * 2);
    f.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!f) throw std::runtime_error("truncated PGM: " + path);
    for (std::size_t i = 0; i < img.data.size(); ++i)
        img.data[i] = static_cast<std::uint16_t>((buf[2 * i] << 8) | buf[2 * i + 1]);
    return img;
}

ImageU16 depth_to_millimeters(const ImageF& depth) {
    ImageU16 out(depth.width, depth.height);
    for (std::size_t i = 0; i < depth.data.size(); ++i) {
        const double mm = std::round(static_cast<double>(depth.data[i]) * 1000.0);
        out.data[i] = static_cast<std::uint16_t>(std::clamp(mm, 0.0, 65535.0));
    }
    return out;
}

ImageU8 to_gray8(const ImageF& map) {
    ImageU8 out(map.width, map.height);
    for (std::size_t i = 0; i < map.data.size(); ++i) {
        const float v = std::clamp(map.data[i], 0.f, 1.f);
        out.data[i] = static_cast<std::uint8_t>(std::lround(v * 255.f));
    }
    return out;
}

}  // namespace rliac
