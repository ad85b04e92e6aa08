#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace rliac {

/// Dense row-major single-channel image.
template <typename T>
struct Image {
    int width = 0;
    int height = 0;
    std::vector<T> data;

    Image() = default;
    Image(int w, int h, T fill = T{}) : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    T& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    const T& at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

    std::size_t size() const { return data.size(); }
    bool same_shape(const Image& o) const { return width == o.width && height == o.height; }
};

using ImageF = Image<float>;
using ImageU8 = Image<std::uint8_t>;
using ImageU16 = Image<std::uint16_t>;

/// Planar 3-channel float image (channel plane stride = width*height).
struct Image3F {
    int width = 0;
    int height = 0;
    std::vector<float> data;  // [c * w*h + y*w + x]

    Image3F() = default;
    Image3F(int w, int h, float fill = 0.f)
        : width(w), height(h), data(3 * static_cast<std::size_t>(w) * h, fill) {}

    float* plane(int c) { return data.data() + static_cast<std::size_t>(c) * width * height; }
    const float* plane(int c) const { return data.data() + static_cast<std::size_t>(c) * width * height; }

    float& at(int c, int x, int y) { return plane(c)[static_cast<std::size_t>(y) * width + x]; }
    const float& at(int c, int x, int y) const { return plane(c)[static_cast<std::size_t>(y) * width + x]; }

    std::size_t pixels() const { return static_cast<std::size_t>(width) * height; }
};

}  // namespace rliac
