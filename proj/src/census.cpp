#include "hankel/census.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "hankel/enumerate.hpp"
#include "hankel/errors.hpp"

namespace hankel {

namespace {

void require_nonnegative(int m, int n) {
    if (m < 0 || n < 0) {
        throw UsageError("Hankel degrees m, n must be >= 0");
    }
}

bool rank_at_most(const Field& field, std::span<const Elem> x, int m, int n, int r,
                  std::vector<Elem>& scratch) {
    if (r <= std::min(m, n)) {
        return detail::rank_le_fast_raw(field, x, m, n, r, scratch);
    }
    return hankel_rank(field, x, {m, n}, scratch) <= static_cast<std::size_t>(r);
}

}  // namespace

CountQuery::CountQuery(int m, int n, int r, SeqTuple prefix)
    : m_(m), n_(n), r_(r), prefix_(std::move(prefix)) {
    require_nonnegative(m, n);
    if (r < 0) {
        throw UsageError("rank bound r must be >= 0");
    }
    if (prefix_.size() > length()) {
        throw UsageError("prefix of length " + std::to_string(prefix_.size()) +
                         " is longer than the tuple (m+n+1 = " + std::to_string(length()) + ")");
    }
}

QueryRange CountQuery::range() const noexcept {
    const int k = this->k();
    if (k <= r_ && r_ <= m_ && r_ <= n_) {
        return QueryRange::Bounded;
    }
    if (k <= r_ && r_ == m_ && m_ == n_ + 1) {
        return QueryRange::SquarePlusOne;
    }
    return QueryRange::Outside;
}

Count count_rank_le_formula(const CountQuery& q) {
    if (q.range() == QueryRange::Outside) {
        throw UsageError("no closed form for k=" + std::to_string(q.k()) + ", r=" +
                         std::to_string(q.r()) + ", m=" + std::to_string(q.m()) + ", n=" +
                         std::to_string(q.n()) +
                         "; needs k <= r <= m, r <= n or k <= r = m = n + 1");
    }
    return count_pow(q.field().order(), static_cast<std::uint64_t>(2 * q.r() - q.k()));
}

Count count_rank_eq_formula(const Field& field, int m, int n, int r) {
    require_nonnegative(m, n);
    if (m > n) {
        throw UsageError("rank-exact formula needs m <= n; swap m and n (rank is transpose "
                         "invariant)");
    }
    if (r < 0) {
        throw UsageError("rank must be >= 0");
    }
    const std::uint32_t q = field.order();
    if (r == 0) {
        return 1;
    }
    if (r <= m) {
        return count_pow(q, 2 * r - 2) * (count_pow(q, 2) - 1);
    }
    if (r == m + 1) {
        return count_pow(q, 2 * r - 2) * (count_pow(q, n - m + 1) - 1);
    }
    return 0;
}

Count count_det_zero_formula(const Field& field, int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw UsageError("determinant count needs 0 <= k <= n");
    }
    return count_pow(field.order(), 2 * n - k);
}

Count count_jt_singular_formula(const Field& field, int u, int v) {
    if (u < 1 || v < 1) {
        throw UsageError("J_{u,v} with u = 0 or v = 0 is unitriangular or empty, so its "
                         "determinant is identically 1; the count needs u, v >= 1");
    }
    return count_pow(field.order(), u + v - 2);
}

void require_within_cap(std::uint32_t q, std::size_t exponent, std::uint64_t cap) {
    const Count work = count_pow(q, exponent);
    if (work > cap) {
        throw ResourceError("exhaustive job needs " + work.str() + " rank tests (" +
                                std::to_string(q) + "^" + std::to_string(exponent) +
                                "), above the cap of " + std::to_string(cap),
                            work.str());
    }
}

Count brute_count_rank_le(const CountQuery& q, const EngineOptions& opts) {
    require_within_cap(q.field().order(), q.free_entries(), opts.cap);
    struct Worker {
        const Field* field;
        int m, n, r;
        std::uint64_t hits = 0;
        std::vector<Elem> scratch{};
        void operator()(std::span<const Elem> x) {
            hits += rank_at_most(*field, x, m, n, r, scratch) ? 1 : 0;
        }
    };
    const Field& field = q.field();
    const auto workers = enumerate_completions(
        field, q.prefix().span(), q.length(), opts.jobs,
        [&] { return Worker{&field, q.m(), q.n(), q.r()}; });
    Count total = 0;
    for (const auto& w : workers) {
        total += w.hits;
    }
    return total;
}

RankDistribution brute_census(const Field& field, int m, int n, const SeqTuple& prefix,
                              const EngineOptions& opts) {
    const CountQuery shape(m, n, 0, prefix);
    require_within_cap(field.order(), shape.free_entries(), opts.cap);
    const auto max_rank = static_cast<std::size_t>(std::min(m, n) + 1);
    struct Worker {
        const Field* field;
        HankelShape shape;
        std::vector<std::uint64_t> hist;
        std::vector<Elem> scratch{};
        void operator()(std::span<const Elem> x) { ++hist[hankel_rank(*field, x, shape, scratch)]; }
    };
    const auto workers = enumerate_completions(field, prefix.span(), shape.length(), opts.jobs, [&] {
        return Worker{&field, {m, n}, std::vector<std::uint64_t>(max_rank + 1, 0), {}};
    });
    RankDistribution out;
    for (std::size_t rho = 0; rho <= max_rank; ++rho) {
        out.counts[rho] = 0;
    }
    for (const auto& w : workers) {
        for (std::size_t rho = 0; rho <= max_rank; ++rho) {
            out.counts[rho] += w.hist[rho];
        }
    }
    for (const auto& [rho, c] : out.counts) {
        out.total += c;
    }
    return out;
}

Count brute_count_det_zero(const Field& field, int n, const SeqTuple& prefix,
                           const EngineOptions& opts) {
    const CountQuery shape(n, n, 0, prefix);
    require_within_cap(field.order(), shape.free_entries(), opts.cap);
    struct Worker {
        const Field* field;
        int n;
        std::uint64_t hits = 0;
        std::vector<Elem> scratch{};
        void operator()(std::span<const Elem> x) {
            hits += hankel_det(*field, x, n, scratch) == 0 ? 1 : 0;
        }
    };
    const auto workers = enumerate_completions(field, prefix.span(), shape.length(), opts.jobs,
                                               [&] { return Worker{&field, n}; });
    Count total = 0;
    for (const auto& w : workers) {
        total += w.hits;
    }
    return total;
}

Count brute_count_jt_singular(const Field& field, int u, int v, const EngineOptions& opts,
                              JtPath path) {
    if (u < 1 || v < 1) {
        throw UsageError("J_{u,v} with u = 0 or v = 0 is unitriangular or empty, so its "
                         "determinant is identically 1; the count needs u, v >= 1");
    }
    const auto length = static_cast<std::size_t>(u + v - 1);
    require_within_cap(field.order(), length, opts.cap);
    struct Worker {
        const Field* field;
        int u, v;
        JtPath path;
        std::uint64_t hits = 0;
        void operator()(std::span<const Elem> y) {
            const SeqTuple tuple(*field, std::vector<Elem>(y.begin(), y.end()));
            const FieldElement d =
                path == JtPath::Flip
                    ? det(materialize_hankel(jt_to_hankel(tuple, u, v), {v - 1, v - 1}))
                    : det(jt_matrix(tuple, u, v));
            hits += d.is_zero() ? 1 : 0;
        }
    };
    const auto workers = enumerate_completions(field, {}, length, opts.jobs,
                                               [&] { return Worker{&field, u, v, path}; });
    Count total = 0;
    for (const auto& w : workers) {
        total += w.hits;
    }
    return total;
}

// Monte Carlo ---------------------------------------------------------------

std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

ElementSampler::ElementSampler(std::uint32_t order, std::uint64_t key) noexcept
    : order_(order), key_(key) {
    unsigned bits = 0;
    while ((std::uint64_t{1} << bits) < order) {
        ++bits;
    }
    mask_ = (std::uint64_t{1} << bits) - 1;
}

Elem ElementSampler::next() noexcept {
    while (true) {
        const std::uint64_t word = mix64(key_ ^ mix64(counter_++));
        const std::uint64_t candidate = word & mask_;
        if (candidate < order_) {
            return static_cast<Elem>(candidate);
        }
    }
}

std::optional<double> McEstimate::z_score() const {
    if (!target) {
        return std::nullopt;
    }
    if (stderr_ == 0.0) {
        return estimate == *target ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return (estimate - *target) / stderr_;
}

bool McEstimate::within(double sigmas) const {
    if (!target) {
        return false;
    }
    if (stderr_ == 0.0) {
        return estimate == *target;
    }
    return std::abs(estimate - *target) <= sigmas * stderr_;
}

McEstimate monte_carlo_rank_le(const CountQuery& q, std::uint64_t trials, std::uint64_t seed,
                               unsigned jobs) {
    if (trials == 0) {
        throw UsageError("Monte Carlo needs at least one trial");
    }
    constexpr std::uint64_t kBlock = 4096;
    const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
    const Field& field = q.field();
    const std::uint64_t stream = mix64(seed);
    std::vector<std::uint64_t> block_hits(blocks, 0);
    std::atomic<std::uint64_t> next{0};

    auto run = [&] {
        std::vector<Elem> x(q.length());
        std::copy(q.prefix().entries().begin(), q.prefix().entries().end(), x.begin());
        std::vector<Elem> scratch{};
        for (std::uint64_t b = next++; b < blocks; b = next++) {
            std::uint64_t hits = 0;
            const std::uint64_t end = std::min(trials, (b + 1) * kBlock);
            for (std::uint64_t t = b * kBlock; t < end; ++t) {
                ElementSampler sampler(field.order(), mix64(stream + t));
                for (std::size_t i = q.prefix().size(); i < x.size(); ++i) {
                    x[i] = sampler.next();
                }
                hits += rank_at_most(field, x, q.m(), q.n(), q.r(), scratch) ? 1 : 0;
            }
            block_hits[b] = hits;
        }
    };
    const std::size_t threads = std::min<std::uint64_t>(std::max(jobs, 1u), blocks);
    if (threads <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(run);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    McEstimate out;
    out.trials = trials;
    for (auto h : block_hits) {
        out.hits += h;
    }
    out.estimate = static_cast<double>(out.hits) / static_cast<double>(trials);
    out.stderr_ = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
    if (q.range() != QueryRange::Outside) {
        const int exponent = 2 * q.r() - static_cast<int>(q.length());
        out.target = std::pow(static_cast<double>(field.order()), exponent);
    }
    return out;
}

// Reports -------------------------------------------------------------------

const char* to_string(Mode m) noexcept {
    switch (m) {
        case Mode::Formula: return "formula";
        case Mode::Brute: return "brute";
        case Mode::Both: return "both";
        case Mode::MonteCarlo: return "monte-carlo";
    }
    return "?";
}

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Match: return "match";
        case Verdict::Mismatch: return "mismatch";
        case Verdict::Estimate: return "estimate";
        case Verdict::Unverified: return "unverified";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

Verdict compare(const std::optional<Count>& formula, const std::optional<Count>& observed) {
    if (!formula || !observed) {
        return Verdict::Unverified;
    }
    return *formula == *observed ? Verdict::Match : Verdict::Mismatch;
}

}  // namespace hankel
