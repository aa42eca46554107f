#pragma once
// Row-update kernels used by Gaussian elimination: y[i] += a * x[i].
//
// The scalar set is the reference. Vector sets must agree with it bit for
// bit; the choice between them is made once at startup from the CPU's
// capabilities (override with HANKEL_SIMD=scalar).

#include <cstddef>
#include <cstdint>
#include <span>

namespace hankel::kernels {

using Word = std::uint32_t;

/// Discrete log tables of GF(2^d). `exp` has 2*(Q-1) entries so that
/// exp[log a + log b] needs no reduction; log[0] is unused and must be 0.
struct LogTables {
    const Word* exp = nullptr;
    const Word* log = nullptr;
};

/// GF(p): y[i] = (y[i] + a*x[i]) mod p. Requires a, x[i], y[i] < p.
using PrimeAxpyFn = void (*)(Word p, Word a, std::span<const Word> x, std::span<Word> y);

/// GF(2^d): y[i] ^= a*x[i] with a given by its discrete log (a != 0).
using Char2AxpyFn = void (*)(const LogTables& tables, Word log_a, std::span<const Word> x,
                             std::span<Word> y);

struct KernelSet {
    const char* name;
    PrimeAxpyFn prime_axpy;
    Char2AxpyFn char2_axpy;
};

const KernelSet& scalar_kernels() noexcept;

/// AVX2 set, or nullptr when not compiled in or not supported by this CPU.
const KernelSet* avx2_kernels() noexcept;

const KernelSet& active_kernels() noexcept;

namespace detail {
void prime_axpy_scalar(Word p, Word a, std::span<const Word> x, std::span<Word> y);
void char2_axpy_scalar(const LogTables& tables, Word log_a, std::span<const Word> x,
                       std::span<Word> y);
#if defined(HANKEL_HAVE_AVX2_KERNELS)
void prime_axpy_avx2(Word p, Word a, std::span<const Word> x, std::span<Word> y);
void char2_axpy_avx2(const LogTables& tables, Word log_a, std::span<const Word> x,
                     std::span<Word> y);
#endif
}  // namespace detail

}  // namespace hankel::kernels
