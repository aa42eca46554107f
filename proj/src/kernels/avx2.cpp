// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "hankel/kernels.hpp"

namespace hankel::kernels::detail {

namespace {

// a*x < 2^24 is exact in single precision, so the float quotient is off by at
// most one and a single correction step restores the residue.
constexpr Word kFloatExactPrimeLimit = 1u << 12;

}  // namespace

void prime_axpy_avx2(Word p, Word a, std::span<const Word> x, std::span<Word> y) {
    if (p >= kFloatExactPrimeLimit) {
        prime_axpy_scalar(p, a, x, y);
        return;
    }
    const std::size_t n = x.size();
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
    const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p) - 1);
    const __m256 vinv = _mm256_set1_ps(1.0f / static_cast<float>(p));
    const __m256i zero = _mm256_setzero_si256();

    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
        const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
        const __m256i prod = _mm256_mullo_epi32(va, vx);
        const __m256 fq = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(prod), vinv));
        __m256i r = _mm256_sub_epi32(prod, _mm256_mullo_epi32(_mm256_cvttps_epi32(fq), vp));
        // r in [-p, 2p): fold into [0, p)
        r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vp));
        r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, vpm1), vp));
        __m256i s = _mm256_add_epi32(vy, r);
        s = _mm256_sub_epi32(s, _mm256_and_si256(_mm256_cmpgt_epi32(s, vpm1), vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), s);
    }
    if (i < n) {
        prime_axpy_scalar(p, a, x.subspan(i), y.subspan(i));
    }
}

void char2_axpy_avx2(const LogTables& tables, Word log_a, std::span<const Word> x,
                     std::span<Word> y) {
    const std::size_t n = x.size();
    const __m256i vla = _mm256_set1_epi32(static_cast<int>(log_a));
    const __m256i zero = _mm256_setzero_si256();
    const int* log_base = reinterpret_cast<const int*>(tables.log);
    const int* exp_base = reinterpret_cast<const int*>(tables.exp);

    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
        const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
        const __m256i lx = _mm256_i32gather_epi32(log_base, vx, 4);
        const __m256i prod = _mm256_i32gather_epi32(exp_base, _mm256_add_epi32(lx, vla), 4);
        const __m256i nonzero = _mm256_xor_si256(_mm256_cmpeq_epi32(vx, zero), _mm256_set1_epi32(-1));
        const __m256i out = _mm256_xor_si256(vy, _mm256_and_si256(prod, nonzero));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), out);
    }
    if (i < n) {
        char2_axpy_scalar(tables, log_a, x.subspan(i), y.subspan(i));
    }
}

}  // namespace hankel::kernels::detail
