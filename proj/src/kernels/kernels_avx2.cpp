// AVX2 variants of the kernel table. This translation unit is compiled with
// -mavx2 -mfma on x86; callers must check avx2_supported() before dispatching.

#include "rliac/kernels/kernels.hpp"

#include <cmath>

#if defined(__x86_64__) || defined(__i386__)
#define RLIAC_X86 1
#include <immintrin.h>
#else
#define RLIAC_X86 0
#endif

namespace rliac::kernels {

#if RLIAC_X86

namespace {

inline float hsum256(__m256 v) {
    __m128 lo = _mm256_castps256_ps128(v);
    __m128 hi = _mm256_extractf128_ps(v, 1);
    lo = _mm_add_ps(lo, hi);
    lo = _mm_hadd_ps(lo, lo);
    lo = _mm_hadd_ps(lo, lo);
    return _mm_cvtss_f32(lo);
}

void cell_mean_std_avx2(const float* plane, int w, int h, int f, float* mean, float* stdev) {
    const int gw = w / f, gh = h / f;
    const float inv_n = 1.0f / static_cast<float>(f * f);
    for (int cy = 0; cy < gh; ++cy) {
        for (int cx = 0; cx < gw; ++cx) {
            __m256 vsum = _mm256_setzero_ps();
            __m256 vsq = _mm256_setzero_ps();
            float tail_sum = 0.f, tail_sq = 0.f;
            for (int ry = 0; ry < f; ++ry) {
                const float* row = plane + static_cast<std::size_t>(cy * f + ry) * w + cx * f;
                int rx = 0;
                for (; rx + 8 <= f; rx += 8) {
                    const __m256 v = _mm256_loadu_ps(row + rx);
                    vsum = _mm256_add_ps(vsum, v);
                    vsq = _mm256_fmadd_ps(v, v, vsq);
                }
                for (; rx < f; ++rx) {
                    const float v = row[rx];
                    tail_sum += v;
                    tail_sq += v * v;
                }
            }
            const float sum = hsum256(vsum) + tail_sum;
            const float sumsq = hsum256(vsq) + tail_sq;
            const float m = sum * inv_n;
            const float var = sumsq * inv_n - m * m;
            mean[cy * gw + cx] = m;
            stdev[cy * gw + cx] = var > 0.f ? std::sqrt(var) : 0.f;
        }
    }
}

double rect_sum_avx2(const float* img, int w, int x, int y, int bw, int bh) {
    double total = 0.0;
    for (int ry = 0; ry < bh; ++ry) {
        const float* row = img + static_cast<std::size_t>(y + ry) * w + x;
        __m256 acc = _mm256_setzero_ps();
        int rx = 0;
        for (; rx + 8 <= bw; rx += 8) acc = _mm256_add_ps(acc, _mm256_loadu_ps(row + rx));
        float row_sum = hsum256(acc);
        for (; rx < bw; ++rx) row_sum += row[rx];
        total += row_sum;
    }
    return total;
}

Confusion confusion_avx2(const std::uint8_t* truth, const std::uint8_t* pred, std::size_t n) {
    Confusion c;
    const __m256i pos = _mm256_set1_epi8(kPositive);
    const __m256i neg = _mm256_set1_epi8(kNegative);
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(truth + i));
        const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pred + i));
        const unsigned is_pos = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(t, pos)));
        const unsigned is_neg = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(t, neg)));
        const unsigned pred1 = ~static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(p, zero)));
        c.tp += __builtin_popcount(is_pos & pred1);
        c.fn += __builtin_popcount(is_pos & ~pred1);
        c.fp += __builtin_popcount(is_neg & pred1);
        c.tn += __builtin_popcount(is_neg & ~pred1);
    }
    for (; i < n; ++i) {
        if (truth[i] == kIgnored) continue;
        if (truth[i] == kPositive) {
            if (pred[i]) ++c.tp; else ++c.fn;
        } else {
            if (pred[i]) ++c.fp; else ++c.tn;
        }
    }
    return c;
}

void binarize_avx2(const float* v, std::size_t n, float threshold, std::uint8_t* out) {
    const __m256 thr = _mm256_set1_ps(threshold);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 x = _mm256_loadu_ps(v + i);
        const unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_cmp_ps(x, thr, _CMP_GT_OQ)));
        for (int k = 0; k < 8; ++k) out[i + k] = (mask >> k) & 1u;
    }
    for (; i < n; ++i) out[i] = v[i] > threshold ? 1 : 0;
}

void ray_points_avx2(const float* dir_x, const float* dir_y, const float* dir_z,
                     const float* depth, std::size_t n, const float rot[9], const float trans[3],
                     float* out_x, float* out_y, float* out_z, std::uint8_t* valid) {
    const __m256 r00 = _mm256_set1_ps(rot[0]), r01 = _mm256_set1_ps(rot[1]), r02 = _mm256_set1_ps(rot[2]);
    const __m256 r10 = _mm256_set1_ps(rot[3]), r11 = _mm256_set1_ps(rot[4]), r12 = _mm256_set1_ps(rot[5]);
    const __m256 r20 = _mm256_set1_ps(rot[6]), r21 = _mm256_set1_ps(rot[7]), r22 = _mm256_set1_ps(rot[8]);
    const __m256 tx = _mm256_set1_ps(trans[0]), ty = _mm256_set1_ps(trans[1]), tz = _mm256_set1_ps(trans[2]);
    const __m256 zero = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 z = _mm256_loadu_ps(depth + i);
        const __m256 keep = _mm256_cmp_ps(z, zero, _CMP_GT_OQ);
        const __m256 cx = _mm256_mul_ps(_mm256_loadu_ps(dir_x + i), z);
        const __m256 cy = _mm256_mul_ps(_mm256_loadu_ps(dir_y + i), z);
        const __m256 cz = _mm256_mul_ps(_mm256_loadu_ps(dir_z + i), z);
        __m256 wx = _mm256_fmadd_ps(r00, cx, _mm256_fmadd_ps(r01, cy, _mm256_fmadd_ps(r02, cz, tx)));
        __m256 wy = _mm256_fmadd_ps(r10, cx, _mm256_fmadd_ps(r11, cy, _mm256_fmadd_ps(r12, cz, ty)));
        __m256 wz = _mm256_fmadd_ps(r20, cx, _mm256_fmadd_ps(r21, cy, _mm256_fmadd_ps(r22, cz, tz)));
        wx = _mm256_and_ps(wx, keep);
        wy = _mm256_and_ps(wy, keep);
        wz = _mm256_and_ps(wz, keep);
        _mm256_storeu_ps(out_x + i, wx);
        _mm256_storeu_ps(out_y + i, wy);
        _mm256_storeu_ps(out_z + i, wz);
        const unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(keep));
        for (int k = 0; k < 8; ++k) valid[i + k] = (mask >> k) & 1u;
    }
    for (; i < n; ++i) {
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

constexpr Ops kAvx2Ops = {
    &cell_mean_std_avx2, &rect_sum_avx2, &confusion_avx2, &binarize_avx2, &ray_points_avx2,
};

}  // namespace

bool avx2_supported() {
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
}

const Ops& avx2_ops() { return kAvx2Ops; }

#else  // !RLIAC_X86

bool avx2_supported() { return false; }
const Ops& avx2_ops() { return scalar_ops(); }

#endif

}  // namespace rliac::kernels
