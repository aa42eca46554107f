#pragma once
// Slow reference computations used as test oracles. None of them share code
// with the library's elimination or table-driven arithmetic.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hankel/gf.hpp"

namespace oracle {

using hankel::Elem;
using hankel::Field;
using Poly = std::vector<std::uint32_t>;  // little-endian over GF(p)
using Mat = std::vector<std::vector<Elem>>;

inline Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
    return a;
}

/// (a * b) mod modulus over GF(p), schoolbook with explicit long division.
inline Poly mulmod(std::uint32_t p, const Poly& modulus, const Poly& a, const Poly& b) {
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    const std::size_t d = modulus.size() - 1;
    for (std::size_t top = prod.size(); top-- > d;) {
        const std::uint64_t c = prod[top];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= d; ++i) {
            const std::uint64_t sub = c * modulus[i] % p;
            prod[top - d + i] = static_cast<std::uint32_t>((prod[top - d + i] + p - sub) % p);
        }
    }
    prod.resize(d, 0);
    return prod;
}

/// Remainder of a by monic b over GF(p).
inline Poly polymod(std::uint32_t p, Poly a, const Poly& b) {
    a = trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db && !a.empty()) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
        }
        a = trim(a);
    }
    return a;
}

/// No monic factor of degree 1..d/2, found by trial division.
inline bool irreducible_by_trial(std::uint32_t p, const Poly& modulus) {
    const std::size_t d = modulus.size() - 1;
    for (std::size_t deg = 1; deg * 2 <= d; ++deg) {
        Poly g(deg + 1, 0);
        g[deg] = 1;
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < deg; ++i) combos *= p;
        for (std::uint64_t c = 0; c < combos; ++c) {
            std::uint64_t t = c;
            for (std::size_t i = 0; i < deg; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (polymod(p, modulus, g).empty()) return false;
        }
    }
    return true;
}

/// Field element index -> coefficients, by plain base-p digits.
inline Poly digits(const Field& f, Elem a) {
    Poly out(f.degree());
    for (auto& c : out) {
        c = a % f.characteristic();
        a /= f.characteristic();
    }
    return out;
}

inline Elem undigits(const Field& f, const Poly& c) {
    Elem out = 0;
    for (std::size_t i = c.size(); i-- > 0;) out = out * f.characteristic() + c[i];
    return out;
}

inline Elem mul(const Field& f, Elem a, Elem b) {
    if (f.degree() == 1) {
        return static_cast<Elem>(std::uint64_t{a} * b % f.characteristic());
    }
    Poly r = mulmod(f.characteristic(), f.modulus(), digits(f, a), digits(f, b));
    r.resize(f.degree(), 0);
    return undigits(f, r);
}

inline Elem add(const Field& f, Elem a, Elem b) {
    Poly x = digits(f, a), y = digits(f, b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % f.characteristic();
    return undigits(f, x);
}

/// Determinant by the Leibniz permutation expansion.
inline Elem leibniz_det(const Field& f, const Mat& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Elem total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Elem term = 1;
        for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m[i][perm[i]]);
        total = f.add(total, inversions % 2 ? f.neg(term) : term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        choose(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Largest r with a nonzero r x r minor.
inline std::size_t rank_by_minors(const Field& f, const Mat& m, std::size_t cols) {
    const std::size_t rows = m.size();
    for (std::size_t r = std::min(rows, cols); r > 0; --r) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        choose(rows, r, 0, cur, rs);
        choose(cols, r, 0, cur, cs);
        for (const auto& ri : rs) {
            for (const auto& ci : cs) {
                Mat sub(r, std::vector<Elem>(r));
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) sub[i][j] = m[ri[i]][ci[j]];
                if (leibniz_det(f, sub) != 0) return r;
            }
        }
    }
    return 0;
}

/// Nonzero v with v M = 0, by trying every v.
inline std::uint64_t left_kernel_count(const Field& f, const Mat& m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<Elem> v(rows, 0);
    std::uint64_t hits = 0;
    while (true) {
        std::size_t pos = 0;
        while (pos < rows && ++v[pos] == f.order()) v[pos++] = 0;
        if (pos == rows) break;
        bool zero = true;
        for (std::size_t j = 0; j < cols && zero; ++j) {
            Elem s = 0;
            for (std::size_t i = 0; i < rows; ++i) s = f.add(s, f.mul(v[i], m[i][j]));
            zero = s == 0;
        }
        hits += zero;
    }
    return hits;
}

inline Mat hankel(const std::vector<Elem>& x, int rdeg, int cdeg) {
    Mat m(static_cast<std::size_t>(rdeg + 1), std::vector<Elem>(static_cast<std::size_t>(cdeg + 1)));
    for (int i = 0; i <= rdeg; ++i)
        for (int j = 0; j <= cdeg; ++j) m[i][j] = x[i + j];
    return m;
}

/// Every tuple in F^len, odometer order.
template <class Visit>
void each_tuple(std::uint32_t q, std::size_t len, Visit visit) {
    std::vector<Elem> x(len, 0);
    while (true) {
        visit(x);
        std::size_t pos = 0;
        while (pos < len && ++x[pos] == q) x[pos++] = 0;
        if (pos == len) return;
    }
}

}  // namespace oracle
