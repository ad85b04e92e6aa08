#pragma once

#include <cstddef>
#include <cstdint>

namespace rliac::kernels {

struct Confusion {
    long long tp = 0, fp = 0, fn = 0, tn = 0;
};

/// Truth codes for confusion counting.
inline constexpr std::uint8_t kNegative = 0;
inline constexpr std::uint8_t kPositive = 1;
inline constexpr std::uint8_t kIgnored = 2;

/// Data-parallel inner loops of the pipeline. Each entry has a scalar
/// reference implementation and an AVX2 variant selected at runtime; the
/// variants are equivalence-tested against the reference.
struct Ops {
    /// Per-cell mean and population stddev over f x f blocks of a plane.
    /// Output grids are (w/f) x (h/f), row-major. f must divide w and h.
    void (*cell_mean_std)(const float* plane, int w, int h, int f, float* mean, float* stdev);

    /// Sum of img over the rectangle [x, x+bw) x [y, y+bh).
    double (*rect_sum)(const float* img, int w, int x, int y, int bw, int bh);

    /// Binary confusion counts. truth: kNegative / kPositive / kIgnored
    /// (ignored entries do not count); pred: 0 or 1.
    Confusion (*confusion)(const std::uint8_t* truth, const std::uint8_t* pred, std::size_t n);

    /// out[i] = v[i] > threshold (strict).
    void (*binarize)(const float* v, std::size_t n, float threshold, std::uint8_t* out);

    /// World-space points from per-pixel unit rays and depths:
    ///   p_i = rot * (dir_i * depth_i) + trans,  valid_i = depth_i > 0.
    /// rot is row-major 3x3. Outputs for invalid pixels are zero.
    void (*ray_points)(const float* dir_x, const float* dir_y, const float* dir_z,
                       const float* depth, std::size_t n, const float rot[9], const float trans[3],
                       float* out_x, float* out_y, float* out_z, std::uint8_t* valid);
};

enum class Backend { Scalar, Avx2 };

/// Runtime-selected table. Selection order: RLIAC_KERNELS env override
/// ("scalar" | "avx2"), then CPUID.
const Ops& ops();
Backend active_backend();
const char* backend_name(Backend b);

/// Reference table, always available (used by the equivalence tests).
const Ops& scalar_ops();

bool avx2_supported();
/// The AVX2 table; only valid to call when avx2_supported().
const Ops& avx2_ops();

}  // namespace rliac::kernels
