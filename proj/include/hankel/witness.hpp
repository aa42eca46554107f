#pragma once
// Constructive pieces behind the prefix-fixed kernel counts:
//
//  * solve_tail: with last(v) != 0, v H_{m,n}(x) = 0 determines x_m..x_{m+n}
//    from x_0..x_{m-1} by forward substitution.
//  * R / R^{-1}: drop / append a trailing zero entry.
//  * weakly / strongly nice tuples for a nonzero v with last(v) == 0, and the
//    bijection alpha: F x {strongly nice} -> {weakly nice} with inverse beta.
//  * the summed identity over all prefix-compatible x.

#include <cstddef>
#include <utility>

#include "hankel/matrix.hpp"
#include "hankel/ranklaw.hpp"

namespace hankel {

/// Final entry v_m. Throws UsageError for an empty vector.
Elem last(const RowVector& v);

/// x of length m+n+1 extending `head` (length m = |v| - 1) with
/// v H_{m,n}(x) = 0. Requires last(v) != 0.
SeqTuple solve_tail(const RowVector& v, const SeqTuple& head, int n);

/// (v_0, ..., v_m) -> (v_0, ..., v_{m-1}); requires last(v) == 0.
RowVector R_map(const RowVector& v);
/// (w_0, ..., w_{m-1}) -> (w_0, ..., w_{m-1}, 0).
RowVector R_inv(const RowVector& w);

/// Parameters of the weakly/strongly nice tuple families.
class NiceContext {
public:
    /// Requires |v| = m + 1, v != 0, last(v) == 0 and |a| <= n + 1.
    NiceContext(int m, int n, RowVector v, SeqTuple a);

    const Field& field() const noexcept { return v_.field(); }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    const RowVector& v() const noexcept { return v_; }
    const SeqTuple& a() const noexcept { return a_; }
    /// Largest index with v_j != 0.
    std::size_t j() const noexcept { return j_; }
    /// Index of the entry that alpha overwrites: j + n + 1.
    std::size_t free_index() const noexcept { return j_ + static_cast<std::size_t>(n_) + 1; }
    std::size_t tuple_length() const noexcept { return static_cast<std::size_t>(m_ + n_ + 1); }

private:
    int m_;
    int n_;
    RowVector v_;
    SeqTuple a_;
    std::size_t j_ = 0;
};

/// x_{[0,k)} = a and v H_{m,n}(x) = 0.
bool is_weakly_nice(const SeqTuple& x, const NiceContext& ctx);
/// x_{[0,k)} = a and R(v) H_{m-1,n+1}(x) = 0.
bool is_strongly_nice(const SeqTuple& x, const NiceContext& ctx);

/// Replaces x_{j+n+1} by y. x must be strongly nice.
SeqTuple alpha(Elem y, const SeqTuple& x, const NiceContext& ctx);
/// (x_{j+n+1}, x with x_{j+n+1} := z) where z solves the extra equation
/// v_0 x_{n+1} + ... + v_j x_{j+n+1} = 0. x must be weakly nice.
std::pair<Elem, SeqTuple> beta(const SeqTuple& x, const NiceContext& ctx);

/// lhs = sum over x with x_{[0,k)} = a of
///       #{v != 0 : v H_{m,n}(x) = 0} - Q #{v != 0 : v H_{m-1,n+1}(x) = 0};
/// rhs = (Q-1) Q^{2m-k}. Requires k <= m and k <= n + 1.
/// Enumerates all Q^{m+n+1-k} completions, sliced over `jobs` threads.
std::pair<Count, Count> sumlast_sides(const Field& field, int m, int n, const SeqTuple& a,
                                      unsigned jobs = 1);

}  // namespace hankel
