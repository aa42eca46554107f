#include "hankel/witness.hpp"

#include <algorithm>
#include <string>

#include "hankel/enumerate.hpp"
#include "hankel/errors.hpp"

namespace hankel {

namespace {

bool has_prefix(const SeqTuple& x, const SeqTuple& a) {
    return a.size() <= x.size() && std::equal(a.entries().begin(), a.entries().end(),
                                              x.entries().begin());
}

void require_length(const SeqTuple& x, const NiceContext& ctx) {
    if (x.size() != ctx.tuple_length()) {
        throw UsageError("tuple has length " + std::to_string(x.size()) + ", expected m+n+1 = " +
                         std::to_string(ctx.tuple_length()));
    }
    if (!(x.field() == ctx.field())) {
        throw UsageError("tuple and context use different fields");
    }
}

}  // namespace

Elem last(const RowVector& v) {
    if (v.empty()) {
        throw UsageError("last() of an empty row vector");
    }
    return v[v.size() - 1];
}

SeqTuple solve_tail(const RowVector& v, const SeqTuple& head, int n) {
    if (v.empty() || last(v) == 0) {
        throw UsageError("solve_tail needs last(v) != 0");
    }
    const std::size_t m = v.size() - 1;
    if (head.size() != m || n < 0) {
        throw UsageError("solve_tail needs a head of length m = " + std::to_string(m) +
                         " and n >= 0");
    }
    const Field& f = v.field();
    const Elem scale = f.neg(f.inv(last(v)));
    std::vector<Elem> x(head.entries());
    x.resize(m + static_cast<std::size_t>(n) + 1);
    for (std::size_t t = 0; t <= static_cast<std::size_t>(n); ++t) {
        Elem acc = Field::zero();
        for (std::size_t i = 0; i < m; ++i) {
            acc = f.add(acc, f.mul(v[i], x[t + i]));
        }
        x[m + t] = f.mul(acc, scale);
    }
    return {f, std::move(x)};
}

RowVector R_map(const RowVector& v) {
    if (last(v) != 0) {
        throw UsageError("R is only defined on vectors with last entry 0");
    }
    return {v.field(), std::vector<Elem>(v.entries().begin(), v.entries().end() - 1)};
}

RowVector R_inv(const RowVector& w) {
    std::vector<Elem> out(w.entries());
    out.push_back(Field::zero());
    return {w.field(), std::move(out)};
}

NiceContext::NiceContext(int m, int n, RowVector v, SeqTuple a)
    : m_(m), n_(n), v_(std::move(v)), a_(std::move(a)) {
    if (m < 0 || n < 0 || v_.size() != static_cast<std::size_t>(m + 1)) {
        throw UsageError("nice-tuple context needs m, n >= 0 and |v| = m + 1");
    }
    if (!(v_.field() == a_.field())) {
        throw UsageError("v and the prefix use different fields");
    }
    if (last(v_) != 0) {
        throw UsageError("nice-tuple context needs last(v) == 0");
    }
    const auto& e = v_.entries();
    const auto it = std::find_if(e.rbegin(), e.rend(), [](Elem c) { return c != 0; });
    if (it == e.rend()) {
        throw UsageError("nice-tuple context needs v != 0");
    }
    if (a_.size() > static_cast<std::size_t>(n + 1)) {
        throw UsageError("nice-tuple context needs k <= n + 1");
    }
    j_ = static_cast<std::size_t>(e.rend() - it) - 1;
}

bool is_weakly_nice(const SeqTuple& x, const NiceContext& ctx) {
    require_length(x, ctx);
    return has_prefix(x, ctx.a()) &&
           left_annihilates(ctx.v(), materialize_hankel(x, {ctx.m(), ctx.n()}));
}

bool is_strongly_nice(const SeqTuple& x, const NiceContext& ctx) {
    require_length(x, ctx);
    return has_prefix(x, ctx.a()) &&
           left_annihilates(R_map(ctx.v()), materialize_hankel(x, {ctx.m() - 1, ctx.n() + 1}));
}

SeqTuple alpha(Elem y, const SeqTuple& x, const NiceContext& ctx) {
    if (!is_strongly_nice(x, ctx)) {
        throw UsageError("alpha is only defined on strongly nice tuples");
    }
    if (!ctx.field().contains(y)) {
        throw UsageError("alpha: replacement value outside the field");
    }
    std::vector<Elem> out(x.entries());
    out[ctx.free_index()] = y;
    return {x.field(), std::move(out)};
}

std::pair<Elem, SeqTuple> beta(const SeqTuple& x, const NiceContext& ctx) {
    if (!is_weakly_nice(x, ctx)) {
        throw UsageError("beta is only defined on weakly nice tuples");
    }
    const Field& f = ctx.field();
    const std::size_t j = ctx.j();
    const auto n1 = static_cast<std::size_t>(ctx.n()) + 1;
    Elem acc = Field::zero();
    for (std::size_t i = 0; i < j; ++i) {
        acc = f.add(acc, f.mul(ctx.v()[i], x[n1 + i]));
    }
    const Elem z = f.neg(f.div(acc, ctx.v()[j]));
    std::vector<Elem> out(x.entries());
    const Elem taken = out[ctx.free_index()];
    out[ctx.free_index()] = z;
    return {taken, SeqTuple(x.field(), std::move(out))};
}

std::pair<Count, Count> sumlast_sides(const Field& field, int m, int n, const SeqTuple& a,
                                      unsigned jobs) {
    const auto k = static_cast<int>(a.size());
    if (m < 0 || n < 0 || k > m || k > n + 1) {
        throw UsageError("sumlast needs k <= m and k <= n + 1");
    }
    if (!(a.field() == field)) {
        throw UsageError("prefix belongs to a different field");
    }
    struct Worker {
        const Field* field;
        int m;
        int n;
        std::int64_t sum = 0;
        std::vector<Elem> scratch;
        void operator()(std::span<const Elem> x) {
            sum += detail::elkies_sides_raw(*field, x, m, n, scratch).second;
        }
    };
    const auto workers = enumerate_completions(field, a.span(), static_cast<std::size_t>(m + n + 1),
                                               jobs, [&] { return Worker{&field, m, n}; });
    Count lhs = 0;
    for (const auto& w : workers) {
        lhs += w.sum;
    }
    const Count rhs = Count(field.order() - 1) * count_pow(field.order(), 2 * m - k);
    return {lhs, rhs};
}

}  // namespace hankel
