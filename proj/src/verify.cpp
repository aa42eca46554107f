// Verification driver: sweeps parameter grids per suite and compares closed
// forms and structural claims against exhaustive enumeration.

#include <algorithm>
#include <string>

#include "hankel/census.hpp"
#include "hankel/enumerate.hpp"
#include "hankel/errors.hpp"
#include "hankel/witness.hpp"

namespace hankel {

namespace {

std::string join(const Field& f, std::span<const Elem> x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += f.format(x[i]);
    }
    return out + ")";
}

struct Tally {
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    std::string first_failure;

    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++instances;
        if (!ok) {
            if (violations == 0) {
                first_failure = describe();
            }
            ++violations;
        }
    }

    void merge(const Tally& o) {
        if (violations == 0 && o.violations != 0) {
            first_failure = o.first_failure;
        }
        instances += o.instances;
        violations += o.violations;
    }
};

// Runs check(x, tally, scratch) over every completion of `prefix`, merging
// slice tallies in slice order so the first failure is reproducible.
template <class Check>
Tally sweep(const Field& f, std::span<const Elem> prefix, std::size_t length,
            const EngineOptions& eng, Check check) {
    require_within_cap(f.order(), length - prefix.size(), eng.cap);
    struct Worker {
        const Check* check;
        Tally tally{};
        std::vector<Elem> scratch{};
        void operator()(std::span<const Elem> x) { (*check)(x, tally, scratch); }
    };
    const auto workers =
        enumerate_completions(f, prefix, length, eng.jobs, [&] { return Worker{&check, {}, {}}; });
    Tally out;
    for (const auto& w : workers) {
        out.merge(w.tally);
    }
    return out;
}

std::string str(long long v) { return std::to_string(v); }

class Recorder {
public:
    Recorder(Suite s, const Field& f, std::int64_t perturbation, std::vector<CensusReport>& out)
        : suite_(to_string(s)), field_(f), perturbation_(perturbation), out_(out) {}

    CensusReport base(std::string family, ParamList params, Mode mode) const {
        CensusReport r{suite_, std::move(family), field_, std::move(params)};
        r.mode = mode;
        return r;
    }

    /// Structural claim checked instance-wise.
    void property(std::string family, ParamList params, const Tally& t) {
        CensusReport r = base(std::move(family), std::move(params), Mode::Brute);
        r.instances = t.instances;
        r.violations = t.violations;
        r.first_failure = t.first_failure;
        r.verdict = t.violations ? Verdict::Mismatch : Verdict::Match;
        out_.push_back(std::move(r));
    }

    /// Closed form against an observed count; extra instance-wise violations
    /// also force a mismatch.
    void count(std::string family, ParamList params, Count formula, Count observed,
               const Tally& t = {}) {
        CensusReport r = base(std::move(family), std::move(params), Mode::Both);
        r.formula = formula + perturbation_;
        r.observed = observed;
        r.instances = std::max<std::uint64_t>(t.instances, 1);
        r.violations = t.violations;
        r.first_failure = t.first_failure;
        r.verdict = compare(r.formula, r.observed);
        if (r.verdict == Verdict::Match && t.violations) {
            r.verdict = Verdict::Mismatch;
        }
        if (r.verdict == Verdict::Mismatch && r.first_failure.empty()) {
            r.first_failure = "formula " + r.formula->str() + " != observed " + observed.str();
        }
        out_.push_back(std::move(r));
    }

    /// A per-prefix closed form: every prefix must reproduce `formula`.
    /// `observed` is the common value, or the first deviating one.
    template <class Observe>
    void per_prefix(std::string family, ParamList params, std::size_t k, const Count& formula,
                    Observe observe) {
        const Count expected = formula + perturbation_;
        Tally t;
        std::optional<Count> shown;
        for_each_tuple(field_, k, [&](std::span<const Elem> a) {
            const Count got = observe(SeqTuple(field_, {a.begin(), a.end()}));
            if (!shown) {
                shown = got;
            }
            t.check(got == expected, [&] {
                shown = got;
                return "a=" + join(field_, a) + ": observed " + got.str();
            });
        });
        params.emplace_back("prefixes", "all");
        CensusReport r = base(std::move(family), std::move(params), Mode::Both);
        r.formula = expected;
        r.observed = shown;
        r.instances = t.instances;
        r.violations = t.violations;
        r.first_failure = t.first_failure;
        r.verdict = t.violations ? Verdict::Mismatch : Verdict::Match;
        out_.push_back(std::move(r));
    }

    void skipped(std::string family, ParamList params, const ResourceError& e) {
        CensusReport r = base(std::move(family), std::move(params), Mode::Brute);
        r.verdict = Verdict::Skipped;
        r.note = e.what();
        out_.push_back(std::move(r));
    }

    /// Runs `body`, turning a cap overrun into a skipped record.
    template <class Body>
    void guarded(const std::string& family, const ParamList& params, Body&& body) {
        try {
            body();
        } catch (const ResourceError& e) {
            skipped(family, params, e);
        }
    }

    const Field& field() const { return field_; }

private:
    std::string suite_;
    Field field_;
    Count perturbation_;
    std::vector<CensusReport>& out_;
};

// Lemmas ----------------------------------------------------------------------

void run_lemmas(Recorder& rec, int bound, const EngineOptions& eng) {
    const Field& f = rec.field();
    for (int big_n = 0; big_n <= bound; ++big_n) {
        const auto len = static_cast<std::size_t>(big_n + 1);
        const ParamList params{{"N", str(big_n)}};
        rec.guarded("lemmas", params, [&] {
            Tally lemma[6];
            struct Multi {  // one tally per lemma
                Tally t[6];
            };
            require_within_cap(f.order(), len, eng.cap);
            struct Worker {
                const Field* f;
                int big_n;
                Multi m;
                std::vector<Elem> scratch{};
                void operator()(std::span<const Elem> x) {
                    auto where = [&](int p, int q) {
                        return "x=" + join(*f, x) + " rdeg=" + std::to_string(p) +
                               " cdeg=" + std::to_string(q);
                    };
                    for (int p = 0; p <= big_n + 1; ++p) {
                        for (int q = 0; p + q <= big_n + 1; ++q) {
                            const RankPair rp{hankel_rank(*f, x, {p, q - 1}, scratch),
                                              hankel_rank(*f, x, {p - 1, q}, scratch)};
                            const AdjacentRankCheck c = check_adjacent_ranks(rp, p, q);
                            m.t[0].check(c.tall_bounded_implies_le, [&] { return where(p, q); });
                            m.t[1].check(c.wide_bounded_implies_le, [&] { return where(p, q); });
                            m.t[2].check(c.both_bounded_implies_eq, [&] { return where(p, q); });
                            m.t[3].check(c.tall_full_implies_wide_p, [&] { return where(p, q); });
                            for (int r = 0; r + 1 <= std::min(p, q); ++r) {
                                m.t[4].check(check_threshold_equivalence(rp, r), [&] {
                                    return where(p, q) + " r=" + std::to_string(r);
                                });
                            }
                        }
                    }
                    for (int mm = 0; mm <= big_n; ++mm) {
                        for (int nn = 0; mm + nn <= big_n; ++nn) {
                            const std::size_t direct = hankel_rank(*f, x, {mm, nn}, scratch);
                            for (int r = 0; r <= std::min(mm, nn); ++r) {
                                const bool fast = detail::rank_le_fast_raw(*f, x, mm, nn, r, scratch);
                                m.t[5].check(fast == (direct <= static_cast<std::size_t>(r)), [&] {
                                    return "x=" + join(*f, x) + " m=" + std::to_string(mm) +
                                           " n=" + std::to_string(nn) + " r=" + std::to_string(r);
                                });
                            }
                        }
                    }
                }
            };
            const auto workers = enumerate_completions(f, {}, len, eng.jobs,
                                                       [&] { return Worker{&f, big_n, {}, {}}; });
            for (const auto& w : workers) {
                for (int i = 0; i < 6; ++i) {
                    lemma[i].merge(w.m.t[i]);
                }
            }
            static const char* names[6] = {
                "tall-bounded-implies-le", "wide-bounded-implies-le", "both-bounded-implies-eq",
                "tall-full-implies-wide-rdeg", "threshold-equivalence", "rank-reduction"};
            for (int i = 0; i < 6; ++i) {
                rec.property(names[i], params, lemma[i]);
            }
        });
    }
}

// Identities ------------------------------------------------------------------

void run_identities(Recorder& rec, int bound, const EngineOptions& eng) {
    const Field& f = rec.field();
    const auto q = static_cast<std::int64_t>(f.order());
    for (int n = 0; n <= bound; ++n) {
        for (int m = 0; m <= n + 1; ++m) {
            const ParamList params{{"m", str(m)}, {"n", str(n)}};
            rec.guarded("kernel-count-identity", params, [&] {
                const auto len = static_cast<std::size_t>(m + n + 1);
                const Tally t = sweep(f, {}, len, eng,
                                      [&](std::span<const Elem> x, Tally& tally,
                                          std::vector<Elem>& scratch) {
                    const auto fast = detail::elkies_sides_raw(f, x, m, n, scratch);
                    const auto slow =
                        elkies_sides_by_enumeration(SeqTuple(f, {x.begin(), x.end()}), m, n);
                    tally.check(fast.first == fast.second && slow == fast, [&] {
                        return "x=" + join(f, x) + " lhs=" + std::to_string(fast.first) +
                               " rhs(nullity)=" + std::to_string(fast.second) +
                               " rhs(enumerated)=" + std::to_string(slow.second);
                    });
                });
                rec.property("kernel-count-identity", params, t);
            });
        }
    }
    // Summed identity and the rank <= m count it yields.
    for (int m = 0; m <= bound + 1; ++m) {
        for (int n = 0; n <= bound; ++n) {
            for (int k = 0; k <= std::min(m, n + 1); ++k) {
                const ParamList params{{"m", str(m)}, {"n", str(n)}, {"k", str(k)}};
                rec.guarded("kernel-count-sum", params, [&] {
                    require_within_cap(f.order(), static_cast<std::size_t>(m + n + 1), eng.cap);
                    const Count rhs = Count(q - 1) * count_pow(f.order(), 2 * m - k);
                    rec.per_prefix("kernel-count-sum", params, k, rhs, [&](const SeqTuple& a) {
                        return sumlast_sides(f, m, n, a, eng.jobs).first;
                    });
                    if (m <= n + 1) {
                        rec.per_prefix("rank-at-most-m", params, k, count_pow(f.order(), 2 * m - k),
                                       [&](const SeqTuple& a) {
                            const CountQuery cq(m, n, m, a);
                            // Direct rank test: r = m may exceed n here.
                            const Tally t = sweep(f, a.span(), cq.length(), eng,
                                                  [&](std::span<const Elem> x, Tally& tally,
                                                      std::vector<Elem>& scratch) {
                                tally.check(hankel_rank(f, x, {m, n}, scratch) <=
                                                static_cast<std::size_t>(m),
                                            [] { return std::string(); });
                            });
                            return Count(t.instances - t.violations);
                        });
                    }
                });
            }
        }
    }
}

// Witnesses -------------------------------------------------------------------

void run_witnesses(Recorder& rec, int bound, const EngineOptions& eng) {
    const Field& f = rec.field();
    const std::uint32_t q = f.order();
    for (int m = 0; m <= bound + 1; ++m) {
        for (int n = 0; n <= bound; ++n) {
            const auto len = static_cast<std::size_t>(m + n + 1);
            const ParamList params{{"m", str(m)}, {"n", str(n)}};

            // Tail solver: last(v) != 0, k <= m.
            rec.guarded("tail-solver", params, [&] {
                require_within_cap(q, len + static_cast<std::size_t>(m + 1), eng.cap);
                Tally count_t;
                Tally solve_t;
                for_each_tuple(f, static_cast<std::size_t>(m + 1), [&](std::span<const Elem> vs) {
                    if (vs.back() == 0) {
                        return;
                    }
                    const RowVector v(f, {vs.begin(), vs.end()});
                    for (int k = 0; k <= m; ++k) {
                        for_each_tuple(f, static_cast<std::size_t>(k), [&](std::span<const Elem> as) {
                            const Count expected = count_pow(q, m - k);
                            std::uint64_t solutions = 0;
                            for_each_tuple(f, len - as.size(), [&](std::span<const Elem> rest) {
                                std::vector<Elem> x(as.begin(), as.end());
                                x.insert(x.end(), rest.begin(), rest.end());
                                const SeqTuple xt(f, std::move(x));
                                solutions += left_annihilates(v, materialize_hankel(xt, {m, n}));
                            });
                            count_t.check(Count(solutions) == expected, [&] {
                                return "v=" + join(f, vs) + " a=" + join(f, as) + ": " +
                                       std::to_string(solutions) + " solutions";
                            });
                            // Every head extending a gives a distinct solution.
                            std::vector<std::vector<Elem>> seen;
                            for_each_tuple(f, static_cast<std::size_t>(m - k), [&](std::span<const Elem> hs) {
                                std::vector<Elem> head(as.begin(), as.end());
                                head.insert(head.end(), hs.begin(), hs.end());
                                const SeqTuple x = solve_tail(v, SeqTuple(f, head), n);
                                const bool ok =
                                    left_annihilates(v, materialize_hankel(x, {m, n})) &&
                                    std::equal(head.begin(), head.end(), x.entries().begin());
                                solve_t.check(ok, [&] {
                                    return "v=" + join(f, vs) + " head=" + join(f, head);
                                });
                                seen.push_back(x.entries());
                            });
                            std::sort(seen.begin(), seen.end());
                            solve_t.check(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
                                          [&] { return "v=" + join(f, vs) + " a=" + join(f, as) +
                                                       ": solve_tail not injective"; });
                        });
                    }
                });
                rec.property("tail-solution-count", params, count_t);
                rec.property("tail-solver", params, solve_t);
            });

            if (m == 0) {
                continue;  // no nonzero v with last(v) = 0
            }
            rec.guarded("alpha-beta", params, [&] {
                require_within_cap(q, len + static_cast<std::size_t>(m), eng.cap);
                Tally bij_t;
                Tally ratio_t;
                Tally closure_t;
                for_each_tuple(f, static_cast<std::size_t>(m + 1), [&](std::span<const Elem> vs) {
                    if (vs.back() != 0 ||
                        std::all_of(vs.begin(), vs.end(), [](Elem c) { return c == 0; })) {
                        return;
                    }
                    for (int k = 0; k <= n + 1; ++k) {
                        for_each_tuple(f, static_cast<std::size_t>(k), [&](std::span<const Elem> as) {
                            const NiceContext ctx(m, n, RowVector(f, {vs.begin(), vs.end()}),
                                                  SeqTuple(f, {as.begin(), as.end()}));
                            const std::size_t idx = ctx.free_index();
                            std::uint64_t weak = 0;
                            std::uint64_t strong = 0;
                            auto where = [&](const SeqTuple& x) {
                                return "v=" + join(f, vs) + " a=" + join(f, as) +
                                       " x=" + x.to_string();
                            };
                            for_each_tuple(f, len - as.size(), [&](std::span<const Elem> rest) {
                                std::vector<Elem> xs(as.begin(), as.end());
                                xs.insert(xs.end(), rest.begin(), rest.end());
                                const SeqTuple x(f, std::move(xs));
                                if (is_strongly_nice(x, ctx)) {
                                    ++strong;
                                    for (Elem y = 0; y < q; ++y) {
                                        const SeqTuple w = alpha(y, x, ctx);
                                        bool ok = is_weakly_nice(w, ctx);
                                        if (ok) {
                                            const auto [y2, x2] = beta(w, ctx);
                                            ok = y2 == y && x2 == x;
                                        }
                                        bij_t.check(ok, [&] {
                                            return where(x) + " y=" + f.format(y) + ": beta(alpha) != id";
                                        });
                                    }
                                }
                                if (is_weakly_nice(x, ctx)) {
                                    ++weak;
                                    const auto [y, x2] = beta(x, ctx);
                                    bool ok = is_strongly_nice(x2, ctx);
                                    if (ok) {
                                        ok = alpha(y, x2, ctx) == x;
                                    }
                                    bij_t.check(ok, [&] { return where(x) + ": alpha(beta) != id"; });
                                    std::vector<Elem> mod(x.entries());
                                    bool closed = true;
                                    for (Elem c = 0; c < q; ++c) {
                                        mod[idx] = c;
                                        closed = closed && is_weakly_nice(SeqTuple(f, mod), ctx);
                                    }
                                    closure_t.check(closed && idx + 1 > as.size(), [&] {
                                        return where(x) + ": entry " + std::to_string(idx) +
                                               " is constrained";
                                    });
                                }
                            });
                            ratio_t.check(weak == std::uint64_t{q} * strong, [&] {
                                return "v=" + join(f, vs) + " a=" + join(f, as) + ": weak " +
                                       std::to_string(weak) + ", strong " + std::to_string(strong);
                            });
                        });
                    }
                });
                rec.property("alpha-beta-inverse", params, bij_t);
                rec.property("weak-equals-q-strong", params, ratio_t);
                rec.property("free-entry-closure", params, closure_t);
            });
        }
    }
}

// Theorems --------------------------------------------------------------------

void run_theorems(Recorder& rec, int bound, const EngineOptions& eng) {
    const Field& f = rec.field();
    const std::uint32_t q = f.order();
    for (int m = 0; m <= bound; ++m) {
        for (int n = 0; n <= bound; ++n) {
            for (int r = 0; r <= std::min(m, n); ++r) {
                for (int k = 0; k <= r; ++k) {
                    const ParamList params{{"m", str(m)}, {"n", str(n)}, {"r", str(r)}, {"k", str(k)}};
                    const std::string family = k == 0 ? "unrestricted" : "prefix-count";
                    rec.guarded(family, params, [&] {
                        require_within_cap(q, static_cast<std::size_t>(m + n + 1), eng.cap);
                        Count sum = 0;
                        rec.per_prefix(family, params, static_cast<std::size_t>(k),
                                       count_pow(q, 2 * r - k), [&](const SeqTuple& a) {
                            const Count c = brute_count_rank_le(CountQuery(m, n, r, a), eng);
                            sum += c;
                            return c;
                        });
                        if (k > 0) {
                            rec.count("prefix-sum", params, count_pow(q, 2 * r), sum);
                        }
                    });
                }
            }
        }
    }
    // Rank-exact distribution.
    for (int n = 0; n <= bound; ++n) {
        for (int m = 0; m <= n; ++m) {
            const ParamList shape{{"m", str(m)}, {"n", str(n)}};
            rec.guarded("rank-exact", shape, [&] {
                const RankDistribution dist = brute_census(f, m, n, SeqTuple(f, {}), eng);
                for (int r = 0; r <= m + 2; ++r) {
                    ParamList params = shape;
                    params.emplace_back("r", str(r));
                    const auto it = dist.counts.find(static_cast<std::size_t>(r));
                    rec.count("rank-exact", params, count_rank_eq_formula(f, m, n, r),
                              it == dist.counts.end() ? Count(0) : it->second);
                }
                rec.count("rank-exact-total", shape, count_pow(q, m + n + 1), dist.total);
            });
        }
    }
    for (int n = 0; n <= std::min(bound, 2); ++n) {
        for (int k = 0; k <= n; ++k) {
            const ParamList params{{"n", str(n)}, {"k", str(k)}};
            rec.guarded("det-zero", params, [&] {
                require_within_cap(q, static_cast<std::size_t>(2 * n + 1), eng.cap);
                rec.per_prefix("det-zero", params, static_cast<std::size_t>(k),
                               count_det_zero_formula(f, n, k), [&](const SeqTuple& a) {
                    return brute_count_det_zero(f, n, a, eng);
                });
            });
        }
    }
    for (int m = 1; m <= bound; ++m) {
        const int n = m - 1;
        for (int k = 0; k <= m; ++k) {
            const ParamList params{{"m", str(m)}, {"n", str(n)}, {"r", str(m)}, {"k", str(k)}};
            rec.guarded("square-plus-one-range", params, [&] {
                require_within_cap(q, static_cast<std::size_t>(m + n + 1), eng.cap);
                rec.per_prefix("square-plus-one-range", params, static_cast<std::size_t>(k),
                               count_pow(q, m + n + 1 - k), [&](const SeqTuple& a) {
                    return brute_count_rank_le(CountQuery(m, n, m, a), eng);
                });
            });
        }
    }
}

// Jacobi-Trudi ----------------------------------------------------------------

void run_jt(Recorder& rec, int bound, const EngineOptions& eng) {
    const Field& f = rec.field();
    for (int u = 1; u <= bound; ++u) {
        for (int v = 1; u + v - 1 <= bound; ++v) {
            const ParamList params{{"u", str(u)}, {"v", str(v)}};
            rec.guarded("jt-singular", params, [&] {
                const auto len = static_cast<std::size_t>(u + v - 1);
                struct Worker {
                    const Field* f;
                    int u, v;
                    Tally tally{};
                    std::uint64_t flip = 0;
                    std::uint64_t direct = 0;
                    void operator()(std::span<const Elem> ys) {
                        const SeqTuple y(*f, {ys.begin(), ys.end()});
                        const Elem dj = det(jt_matrix(y, u, v)).value();
                        const Elem dh =
                            det(materialize_hankel(jt_to_hankel(y, u, v), {v - 1, v - 1})).value();
                        flip += dh == 0;
                        direct += dj == 0;
                        const Elem signed_dh = jt_flip_sign(v) < 0 ? f->neg(dh) : dh;
                        tally.check(dj == signed_dh, [&] {
                            return "y=" + y.to_string() + ": det J=" + f->format(dj) +
                                   ", signed det H=" + f->format(signed_dh);
                        });
                    }
                };
                require_within_cap(f.order(), len, eng.cap);
                const auto workers = enumerate_completions(f, {}, len, eng.jobs,
                                                           [&] { return Worker{&f, u, v}; });
                Tally t;
                Count flip = 0;
                Count direct = 0;
                for (const auto& w : workers) {
                    t.merge(w.tally);
                    flip += w.flip;
                    direct += w.direct;
                }
                const Count formula = count_jt_singular_formula(f, u, v);
                rec.count("jt-singular-flip", params, formula, flip);
                rec.count("jt-singular-direct", params, formula, direct);
                rec.property("jt-flip-sign", params, t);
            });
        }
    }
}

}  // namespace

const char* to_string(Suite s) noexcept {
    switch (s) {
        case Suite::Lemmas: return "lemmas";
        case Suite::Identities: return "identities";
        case Suite::Witnesses: return "witnesses";
        case Suite::Theorems: return "theorems";
        case Suite::Jt: return "jt";
    }
    return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : all_suites()) {
        if (name == to_string(s)) {
            return s;
        }
    }
    return std::nullopt;
}

std::vector<Suite> all_suites() {
    return {Suite::Lemmas, Suite::Identities, Suite::Witnesses, Suite::Theorems, Suite::Jt};
}

namespace {

// Largest b <= ceiling with q^(scale*b + offset) <= budget, at least floor.
int fit(std::uint32_t q, int scale, int offset, std::uint64_t budget, int floor, int ceiling) {
    int best = floor;
    for (int b = floor; b <= ceiling; ++b) {
        if (count_pow(q, static_cast<std::uint64_t>(scale * b + offset)) <= budget) {
            best = b;
        }
    }
    return best;
}

}  // namespace

int default_bound(Suite s, std::uint32_t q) {
    switch (s) {
        case Suite::Lemmas:
            if (q == 2) return 6;
            if (q == 3) return 4;
            return fit(q, 1, 1, 4096, 0, 6);
        case Suite::Identities:
            if (q == 2) return 3;
            if (q == 3) return 2;
            return fit(q, 2, 2, 4096, 0, 2);
        case Suite::Witnesses:
            if (q <= 3) return 2;
            return fit(q, 2, 2, 4096, 0, 2);
        case Suite::Theorems:
            return fit(q, 2, 1, 20000, 0, 3);
        case Suite::Jt:
            return fit(q, 1, 0, 5000, 1, 6);
    }
    return 0;
}

std::vector<CensusReport> verify(const VerifyOptions& opts) {
    std::vector<CensusReport> out;
    for (const Field& f : opts.fields) {
        for (Suite s : opts.suites) {
            const int bound = opts.max_n.value_or(default_bound(s, f.order()));
            if (bound < 0) {
                throw UsageError("--max-n must be >= 0");
            }
            Recorder rec(s, f, opts.formula_perturbation, out);
            switch (s) {
                case Suite::Lemmas: run_lemmas(rec, bound, opts.engine); break;
                case Suite::Identities: run_identities(rec, bound, opts.engine); break;
                case Suite::Witnesses: run_witnesses(rec, bound, opts.engine); break;
                case Suite::Theorems: run_theorems(rec, bound, opts.engine); break;
                case Suite::Jt: run_jt(rec, bound, opts.engine); break;
            }
        }
    }
    return out;
}

}  // namespace hankel
