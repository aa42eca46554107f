#include "hankel/ranklaw.hpp"

#include <algorithm>
#include <string>

#include "hankel/enumerate.hpp"
#include "hankel/errors.hpp"

namespace hankel {

namespace {

std::int64_t ipow(std::int64_t base, std::size_t e) {
    std::int64_t out = 1;
    for (std::size_t i = 0; i < e; ++i) {
        out *= base;
    }
    return out;
}

// Nonzero v in F^rows with v H = 0, found by trying them all.
std::int64_t count_annihilators(const SeqTuple& x, HankelShape shape) {
    const DenseMatrix h = materialize_hankel(x, shape);
    std::int64_t hits = 0;
    for_each_tuple(x.field(), shape.rows(), [&](std::span<const Elem> v) {
        if (std::all_of(v.begin(), v.end(), [](Elem c) { return c == 0; })) {
            return;
        }
        hits += left_annihilates(SeqTuple(x.field(), {v.begin(), v.end()}), h) ? 1 : 0;
    });
    return hits;
}

void require_reduction_params(std::size_t length, int m, int n, int r) {
    if (m < 0 || n < 0 || r < 0 || r > m || r > n ||
        static_cast<std::size_t>(m + n) + 1 > length) {
        throw UsageError("rank reduction needs 0 <= r <= m, r <= n and m + n <= N (m=" +
                         std::to_string(m) + ", n=" + std::to_string(n) + ", r=" +
                         std::to_string(r) + ", N=" + std::to_string(length) + "-1)");
    }
}

}  // namespace

Count count_pow(std::uint64_t q, std::uint64_t e) {
    Count out = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        out *= q;
    }
    return out;
}

RankPair rank_pair(const SeqTuple& x, int rdeg, int cdeg) {
    if (rdeg < 0 || cdeg < 0 || static_cast<std::size_t>(rdeg + cdeg) > x.size()) {
        throw UsageError("rank_pair needs rdeg, cdeg >= 0 and rdeg + cdeg <= N + 1");
    }
    std::vector<Elem> scratch;
    RankPair out;
    out.rank_tall = hankel_rank(x.field(), x.span(), {rdeg, cdeg - 1}, scratch);
    out.rank_wide = hankel_rank(x.field(), x.span(), {rdeg - 1, cdeg}, scratch);
    return out;
}

AdjacentRankCheck check_adjacent_ranks(const RankPair& ranks, int rdeg, int cdeg) {
    const auto p = static_cast<std::size_t>(rdeg);
    const auto q = static_cast<std::size_t>(cdeg);
    const std::size_t tall = ranks.rank_tall;
    const std::size_t wide = ranks.rank_wide;
    AdjacentRankCheck c;
    c.tall_bounded_implies_le = !(tall <= p) || tall <= wide;
    c.wide_bounded_implies_le = !(wide <= q) || wide <= tall;
    c.both_bounded_implies_eq = !(tall <= p && wide <= q) || tall == wide;
    c.tall_full_implies_wide_p = !(tall > p) || wide == p;
    return c;
}

bool check_threshold_equivalence(const RankPair& ranks, int r) {
    const auto bound = static_cast<std::size_t>(r);
    return (ranks.rank_tall <= bound) == (ranks.rank_wide <= bound);
}

namespace detail {

bool rank_le_fast_raw(const Field& field, std::span<const Elem> x, int m, int n, int r,
                      std::vector<Elem>& scratch) {
    const HankelShape reduced{r, m + n - r};
    return hankel_rank(field, x, reduced, scratch) <= static_cast<std::size_t>(r);
}

std::pair<std::int64_t, std::int64_t> elkies_sides_raw(const Field& field,
                                                       std::span<const Elem> x, int m, int n,
                                                       std::vector<Elem>& scratch) {
    const auto q = static_cast<std::int64_t>(field.order());
    const std::size_t rank_mn = hankel_rank(field, x, {m, n}, scratch);
    const std::size_t rank_wide = hankel_rank(field, x, {m - 1, n + 1}, scratch);
    const std::size_t null_mn = static_cast<std::size_t>(m + 1) - rank_mn;
    const std::size_t null_wide = static_cast<std::size_t>(m) - rank_wide;
    const std::int64_t lhs = rank_mn <= static_cast<std::size_t>(m) ? q - 1 : 0;
    const std::int64_t rhs = (ipow(q, null_mn) - 1) - q * (ipow(q, null_wide) - 1);
    return {lhs, rhs};
}

}  // namespace detail

bool rank_le_fast(const SeqTuple& x, int m, int n, int r) {
    require_reduction_params(x.size(), m, n, r);
    std::vector<Elem> scratch;
    return detail::rank_le_fast_raw(x.field(), x.span(), m, n, r, scratch);
}

std::pair<std::size_t, HankelShape> rank_via_reduction(const SeqTuple& x, int m, int n) {
    if (m < -1 || n < -1 || !HankelShape{m, n}.valid_for(x.size())) {
        throw UsageError("Hankel shape (" + std::to_string(m) + "," + std::to_string(n) +
                         ") does not fit a tuple of length " + std::to_string(x.size()));
    }
    if (m < 0 || n < 0) {
        return {0, HankelShape{m, n}};
    }
    std::vector<Elem> scratch;
    for (int r = 0; r <= std::min(m, n); ++r) {
        if (detail::rank_le_fast_raw(x.field(), x.span(), m, n, r, scratch)) {
            return {static_cast<std::size_t>(r), HankelShape{r, m + n - r}};
        }
    }
    return {static_cast<std::size_t>(std::min(m, n) + 1), HankelShape{m, n}};
}

Count kernel_count_nonzero(const DenseMatrix& m) {
    return count_pow(m.field().order(), left_kernel_dim(m)) - 1;
}

std::pair<std::int64_t, std::int64_t> elkies_identity_sides(const SeqTuple& x, int m, int n) {
    if (m < 0 || n < 0 || m > n + 1 || static_cast<std::size_t>(m + n) + 1 > x.size()) {
        throw UsageError("the kernel-count identity needs 0 <= m <= n + 1 and m + n <= N");
    }
    std::vector<Elem> scratch;
    return detail::elkies_sides_raw(x.field(), x.span(), m, n, scratch);
}

std::pair<std::int64_t, std::int64_t> elkies_sides_by_enumeration(const SeqTuple& x, int m,
                                                                  int n) {
    if (m < 0 || n < 0 || m > n + 1 || static_cast<std::size_t>(m + n) + 1 > x.size()) {
        throw UsageError("the kernel-count identity needs 0 <= m <= n + 1 and m + n <= N");
    }
    const auto q = static_cast<std::int64_t>(x.field().order());
    const std::int64_t lhs =
        rank_gauss(materialize_hankel(x, {m, n})) <= static_cast<std::size_t>(m) ? q - 1 : 0;
    const std::int64_t rhs =
        count_annihilators(x, {m, n}) - q * count_annihilators(x, {m - 1, n + 1});
    return {lhs, rhs};
}

}  // namespace hankel
