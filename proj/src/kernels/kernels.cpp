#include "rliac/kernels/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace rliac::kernels {

namespace {

void cell_mean_std_scalar(const float* plane, int w, int h, int f, float* mean, float* stdev) {
    const int gw = w / f, gh = h / f;
    const float inv_n = 1.0f / static_cast<float>(f * f);
    for (int cy = 0; cy < gh; ++cy) {
        for (int cx = 0; cx < gw; ++cx) {
            float sum = 0.f, sumsq = 0.f;
            for (int ry = 0; ry < f; ++ry) {
                const float* row = plane + static_cast<std::size_t>(cy * f + ry) * w + cx * f;
                for (int rx = 0; rx < f; ++rx) {
                    const float v = row[rx];
                    sum += v;
                    sumsq += v * v;
                }
            }
            const float m = sum * inv_n;
            const float var = sumsq * inv_n - m * m;
            mean[cy * gw + cx] = m;
            stdev[cy * gw + cx] = var > 0.f ? std::sqrt(var) : 0.f;
        }
    }
}

double rect_sum_scalar(const float* img, int w, int x, int y, int bw, int bh) {
    double total = 0.0;
    for (int ry = 0; ry < bh; ++ry) {
        const float* row = img + static_cast<std::size_t>(y + ry) * w + x;
        float row_sum = 0.f;
        for (int rx = 0; rx < bw; ++rx) row_sum += row[rx];
        total += row_sum;
    }
    return total;
}

Confusion confusion_scalar(const std::uint8_t* truth, const std::uint8_t* pred, std::size_t n) {
    Confusion c;
    for (std::size_t i = 0; i < n; ++i) {
        if (truth[i] == kIgnored) continue;
        if (truth[i] == kPositive) {
            if (pred[i]) ++c.tp; else ++c.fn;
        } else {
            if (pred[i]) ++c.fp; else ++c.tn;
        }
    }
    return c;
}

void binarize_scalar(const float* v, std::size_t n, float threshold, std::uint8_t* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = v[i] > threshold ? 1 : 0;
}

void ray_points_scalar(const float* dir_x, const float* dir_y, const float* dir_z,
                       const float* depth, std::size_t n, const float rot[9], const float trans[3],
                       float* out_x, float* out_y, float* out_z, std::uint8_t* valid) {
    for (std::size_t i = 0; i < n; ++i) {
        const float z = depth[i];
        if (z > 0.f) {
            const float cx = dir_x[i] * z, cy = dir_y[i] * z, cz = dir_z[i] * z;
            out_x[i] = rot[0] * cx + rot[1] * cy + rot[2] * cz + trans[0];
            out_y[i] = rot[3] * cx + rot[4] * cy + rot[5] * cz + trans[1];
            out_z[i] = rot[6] * cx + rot[7] * cy + rot[8] * cz + trans[2];
            valid[i] = 1;
        } else {
            out_x[i] = out_y[i] = out_z[i] = 0.f;
            valid[i] = 0;
        }
    }
}

constexpr Ops kScalarOps = {
    &cell_mean_std_scalar, &rect_sum_scalar, &confusion_scalar, &binarize_scalar, &ray_points_scalar,
};

Backend select_backend() {
    if (const char* env = std::getenv("RLIAC_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Backend::Avx2;
    }
    return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

Backend active_backend() {
    static const Backend backend = select_backend();
    return backend;
}

const Ops& ops() {
    return active_backend() == Backend::Avx2 ? avx2_ops() : scalar_ops();
}

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

}  // namespace rliac::kernels
