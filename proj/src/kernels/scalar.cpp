#include "hankel/kernels.hpp"

namespace hankel::kernels::detail {

void prime_axpy_scalar(Word p, Word a, std::span<const Word> x, std::span<Word> y) {
    const std::uint64_t mod = p;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::uint64_t prod = (static_cast<std::uint64_t>(a) * x[i]) % mod;
        y[i] = static_cast<Word>((y[i] + prod) % mod);
    }
}

void char2_axpy_scalar(const LogTables& tables, Word log_a, std::span<const Word> x,
                       std::span<Word> y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0) {
            y[i] ^= tables.exp[log_a + tables.log[x[i]]];
        }
    }
}

}  // namespace hankel::kernels::detail
