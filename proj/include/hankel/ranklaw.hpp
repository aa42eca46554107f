#pragma once
// Rank relations between adjacent Hankel matrices H_{p,q-1}(x), H_{p-1,q}(x),
// the reduction rank(H_{m,n}) <= r  <=>  rank(H_{r,m+n-r}) <= r, and the
// kernel-count identity that turns a rank condition into local conditions.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hankel/matrix.hpp"

namespace hankel {

using Count = boost::multiprecision::cpp_int;

/// Q^e as an exact integer.
Count count_pow(std::uint64_t q, std::uint64_t e);

struct RankPair {
    std::size_t rank_tall = 0;  ///< rank H_{rdeg, cdeg-1}(x)
    std::size_t rank_wide = 0;  ///< rank H_{rdeg-1, cdeg}(x)
};

/// Requires rdeg, cdeg >= 0 and rdeg + cdeg <= N + 1.
RankPair rank_pair(const SeqTuple& x, int rdeg, int cdeg);

/// Which adjacent-rank statements hold for one (x, p, q). Each flag is true
/// when the statement holds, including vacuously.
struct AdjacentRankCheck {
    bool tall_bounded_implies_le = true;   ///< tall <= p  =>  tall <= wide
    bool wide_bounded_implies_le = true;   ///< wide <= q  =>  wide <= tall
    bool both_bounded_implies_eq = true;   ///< both bounds =>  tall == wide
    bool tall_full_implies_wide_p = true;  ///< tall > p  =>  wide == p

    bool all() const noexcept {
        return tall_bounded_implies_le && wide_bounded_implies_le && both_bounded_implies_eq &&
               tall_full_implies_wide_p;
    }
};

AdjacentRankCheck check_adjacent_ranks(const RankPair& ranks, int rdeg, int cdeg);

/// For r + 1 <= p and r + 1 <= q: (tall <= r) <=> (wide <= r).
bool check_threshold_equivalence(const RankPair& ranks, int r);

/// rank(H_{m,n}(x)) <= r via the smaller matrix H_{r, m+n-r}(x).
/// Requires r <= m, r <= n, m + n <= N.
bool rank_le_fast(const SeqTuple& x, int m, int n, int r);

/// rank(H_{m,n}(x)) found by probing r = 0, 1, ... with rank_le_fast. Returns
/// the rank and the shape (r, m+n-r) of the first successful probe, or
/// (m, n) itself when the matrix has full rank min(m,n)+1.
std::pair<std::size_t, HankelShape> rank_via_reduction(const SeqTuple& x, int m, int n);

/// Q^{left_kernel_dim(M)} - 1: the number of nonzero v with vM = 0.
Count kernel_count_nonzero(const DenseMatrix& m);

/// lhs = (Q-1) [rank H_{m,n}(x) <= m];
/// rhs = #{v != 0 : v H_{m,n} = 0} - Q #{v != 0 : v H_{m-1,n+1} = 0}.
/// Requires m <= n + 1 and m + n <= N.
std::pair<std::int64_t, std::int64_t> elkies_identity_sides(const SeqTuple& x, int m, int n);

/// Same sides, but the kernel sizes come from trying every v in F^{m+1} and
/// F^m instead of from rank-nullity. Exponential in m; meant as a cross-check.
std::pair<std::int64_t, std::int64_t> elkies_sides_by_enumeration(const SeqTuple& x, int m,
                                                                  int n);

namespace detail {

/// Allocation-reusing core of rank_le_fast over a raw tuple.
bool rank_le_fast_raw(const Field& field, std::span<const Elem> x, int m, int n, int r,
                      std::vector<Elem>& scratch);

/// Same identity over a raw tuple; nullities are read off by rank-nullity.
std::pair<std::int64_t, std::int64_t> elkies_sides_raw(const Field& field,
                                                       std::span<const Elem> x, int m, int n,
                                                       std::vector<Elem>& scratch);

}  // namespace detail

}  // namespace hankel
