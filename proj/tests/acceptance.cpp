// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "hankel/census.hpp"
#include "hankel/cli.hpp"
#include "hankel/witness.hpp"
#include "oracles.hpp"

using namespace hankel;

namespace {

struct Outcome {
    std::uint64_t points = 0;
    std::string failure;

    bool expect(bool ok, const std::function<std::string()>& what) {
        ++points;
        if (!ok && failure.empty()) failure = what();
        return ok;
    }
};

// Q^e computed without the library.
Count power(std::uint64_t q, int e) {
    Count c = 1;
    for (int i = 0; i < e; ++i) c *= q;
    return c;
}

std::string show(const std::vector<Elem>& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

std::string where(const Field& f, std::initializer_list<std::pair<const char*, long long>> kv) {
    std::string s = "Q=" + std::to_string(f.order());
    for (const auto& [k, v] : kv) s += std::string(" ") + k + "=" + std::to_string(v);
    return s;
}

Outcome ac1_prefix_fixed() {
    Outcome o;
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        const Field f = Field::builtin(q);
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= n; ++m)
                for (int r = 0; r <= m; ++r)
                    for (int k = 0; k <= r; ++k)
                        oracle::each_tuple(f.order(), static_cast<std::size_t>(k), [&](const std::vector<Elem>& a) {
                            const Count got = brute_count_rank_le(CountQuery(m, n, r, SeqTuple(f, a)));
                            o.expect(got == power(q, 2 * r - k), [&] {
                                return where(f, {{"m", m}, {"n", n}, {"r", r}}) + " prefix " + show(a) +
                                       " gave " + got.str();
                            });
                        });
    }
    return o;
}

Outcome ac2_unrestricted() {
    Outcome o;
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        const Field f = Field::builtin(q);
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= n; ++m)
                for (int r = 0; r <= m; ++r) {
                    const CountQuery query(m, n, r, SeqTuple(f, {}));
                    const Count got = brute_count_rank_le(query);
                    o.expect(got == power(q, 2 * r) && count_rank_le_formula(query) == got,
                             [&] { return where(f, {{"m", m}, {"n", n}, {"r", r}}) + " gave " + got.str(); });
                }
    }
    return o;
}

Outcome ac3_rank_exact() {
    Outcome o;
    for (std::uint64_t q : {2ull, 3ull}) {
        const Field f = Field::builtin(q);
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= n; ++m) {
                const RankDistribution d = brute_census(f, m, n, SeqTuple(f, {}));
                for (int r = 0; r <= m + 3; ++r) {
                    Count want;
                    if (r == 0) {
                        want = 1;
                    } else if (r <= m) {
                        want = power(q, 2 * r - 2) * (q * q - 1);
                    } else if (r == m + 1) {
                        want = power(q, m + n + 1) - power(q, 2 * m);
                    } else {
                        want = 0;
                    }
                    const auto it = d.counts.find(static_cast<std::size_t>(r));
                    const Count seen = it == d.counts.end() ? Count(0) : it->second;
                    o.expect(seen == want && count_rank_eq_formula(f, m, n, r) == want, [&] {
                        return where(f, {{"m", m}, {"n", n}, {"r", r}}) + " census " + seen.str() +
                               " expected " + want.str();
                    });
                }
            }
    }
    return o;
}

Outcome ac4_determinant() {
    Outcome o;
    for (std::uint64_t q : {2ull, 3ull}) {
        const Field f = Field::builtin(q);
        for (int n = 0; n <= 2; ++n)
            for (int k = 0; k <= n; ++k)
                oracle::each_tuple(f.order(), static_cast<std::size_t>(k), [&](const std::vector<Elem>& a) {
                    const Count got = brute_count_det_zero(f, n, SeqTuple(f, a));
                    o.expect(got == power(q, 2 * n - k), [&] {
                        return where(f, {{"n", n}}) + " prefix " + show(a) + " gave " + got.str();
                    });
                });
    }
    return o;
}

Outcome ac5_jacobi_trudi() {
    Outcome o;
    for (std::uint64_t q : {2ull, 3ull}) {
        const Field f = Field::builtin(q);
        for (int u = 1; u <= 6; ++u)
            for (int v = 1; u + v - 1 <= 6; ++v) {
                const Count want = power(q, u + v - 2);
                const Count flip = brute_count_jt_singular(f, u, v, {}, JtPath::Flip);
                const Count direct = brute_count_jt_singular(f, u, v, {}, JtPath::Direct);
                o.expect(flip == want && direct == want, [&] {
                    return where(f, {{"u", u}, {"v", v}}) + " flip " + flip.str() + " direct " + direct.str();
                });
                const int sign = jt_flip_sign(v);
                oracle::each_tuple(f.order(), static_cast<std::size_t>(u + v - 1), [&](const std::vector<Elem>& ys) {
                    const SeqTuple y(f, ys);
                    const Elem dj = det(jt_matrix(y, u, v)).value();
                    const Elem dh = det(materialize_hankel(jt_to_hankel(y, u, v), {v - 1, v - 1})).value();
                    o.expect(dj == (sign > 0 ? dh : f.neg(dh)),
                             [&] { return where(f, {{"u", u}, {"v", v}}) + " y " + show(ys) + " determinants differ"; });
                });
            }
        if (q == 2) {
            o.expect(brute_count_jt_singular(f, 2, 5) == 32, [] { return std::string("u=2 v=5 over GF(2) is not 32"); });
        }
    }
    return o;
}

Outcome ac6_lemmas() {
    Outcome o;
    for (auto [q, bound] : {std::pair{2u, 6}, std::pair{3u, 4}}) {
        const Field f = Field::prime(q);
        VerifyOptions opts;
        opts.fields = {f};
        opts.suites = {Suite::Lemmas};
        opts.max_n = bound;
        std::uint64_t instances = 0;
        for (const CensusReport& r : verify(opts)) {
            instances += r.instances;
            o.expect(r.verdict == Verdict::Match, [&] { return r.family + " " + r.first_failure; });
        }
        o.expect(instances > 0, [] { return std::string("lemma suite checked nothing"); });
        // The fast threshold test against materialised Gaussian rank, every shape and threshold.
        for (int total = 0; total <= bound; ++total)
            for (int m = 0; m <= total; ++m) {
                const int n = total - m;
                oracle::each_tuple(q, static_cast<std::size_t>(total + 1), [&](const std::vector<Elem>& xs) {
                    const SeqTuple x(f, xs);
                    const std::size_t rank = rank_gauss(materialize_hankel(x, {m, n}));
                    for (int r = 0; r <= std::min(m, n); ++r) {
                        o.expect(rank_le_fast(x, m, n, r) == (rank <= static_cast<std::size_t>(r)), [&] {
                            return where(f, {{"m", m}, {"n", n}, {"r", r}}) + " x " + show(xs);
                        });
                    }
                });
            }
    }
    return o;
}

Outcome ac7_kernel_identity() {
    Outcome o;
    for (auto [q, limit] : {std::pair{2u, 4}, std::pair{3u, 3}}) {
        const Field f = Field::prime(q);
        for (int n = 0; n + 1 <= limit; ++n)
            for (int m = 0; m <= n + 1; ++m)
                oracle::each_tuple(q, static_cast<std::size_t>(m + n + 1), [&](const std::vector<Elem>& xs) {
                    const SeqTuple x(f, xs);
                    const auto nullity = elkies_identity_sides(x, m, n);
                    const auto listed = elkies_sides_by_enumeration(x, m, n);
                    o.expect(nullity.first == nullity.second && listed == nullity, [&] {
                        return where(f, {{"m", m}, {"n", n}}) + " x " + show(xs) + " sides " +
                               std::to_string(nullity.first) + "/" + std::to_string(nullity.second) + " vs " +
                               std::to_string(listed.first) + "/" + std::to_string(listed.second);
                    });
                });
    }
    return o;
}

Outcome ac8_sumlast() {
    Outcome o;
    for (std::uint32_t q : {2u, 3u}) {
        const Field f = Field::prime(q);
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                for (int k = 0; k <= std::min(m, n + 1); ++k)
                    oracle::each_tuple(q, static_cast<std::size_t>(k), [&](const std::vector<Elem>& a) {
                        const Count want = Count(q - 1) * power(q, 2 * m - k);
                        const auto [lhs, rhs] = sumlast_sides(f, m, n, SeqTuple(f, a));
                        // Kernel sizes counted by the oracle, independent of the identity.
                        std::int64_t literal = 0;
                        if (m >= 1) {
                            oracle::each_tuple(q, static_cast<std::size_t>(m + n + 1 - k), [&](const std::vector<Elem>& rest) {
                                std::vector<Elem> x(a);
                                x.insert(x.end(), rest.begin(), rest.end());
                                literal += static_cast<std::int64_t>(
                                    oracle::left_kernel_count(f, oracle::hankel(x, m, n), static_cast<std::size_t>(n + 1)));
                                literal -= static_cast<std::int64_t>(q) *
                                           static_cast<std::int64_t>(oracle::left_kernel_count(
                                               f, oracle::hankel(x, m - 1, n + 1), static_cast<std::size_t>(n + 2)));
                            });
                        }
                        o.expect(lhs == want && rhs == want && (m == 0 || Count(literal) == want), [&] {
                            return where(f, {{"m", m}, {"n", n}}) + " prefix " + show(a) + " gave " + lhs.str() +
                                   " expected " + want.str();
                        });
                    });
    }
    return o;
}

Outcome ac9_bijection() {
    Outcome o;
    for (std::uint32_t q : {2u, 3u}) {
        const Field f = Field::prime(q);
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n <= 2; ++n) {
                const std::size_t len = static_cast<std::size_t>(m + n + 1);
                oracle::each_tuple(q, static_cast<std::size_t>(m), [&](const std::vector<Elem>& head) {
                    bool nonzero = false;
                    for (Elem e : head) nonzero = nonzero || e != 0;
                    if (!nonzero) return;
                    std::vector<Elem> vs(head);
                    vs.push_back(0);
                    const RowVector v(f, vs);
                    for (int k = 0; k <= n + 1; ++k)
                        oracle::each_tuple(q, static_cast<std::size_t>(k), [&](const std::vector<Elem>& a) {
                            const NiceContext ctx(m, n, v, SeqTuple(f, a));
                            std::uint64_t weak = 0, strong = 0;
                            oracle::each_tuple(q, len, [&](const std::vector<Elem>& xs) {
                                const SeqTuple x(f, xs);
                                if (is_weakly_nice(x, ctx)) {
                                    ++weak;
                                    const auto [y, s] = beta(x, ctx);
                                    o.expect(alpha(y, s, ctx) == x, [&] { return "alpha(beta(x)) != x for x " + show(xs); });
                                }
                                if (is_strongly_nice(x, ctx)) {
                                    ++strong;
                                    for (Elem y = 0; y < q; ++y) {
                                        const auto back = beta(alpha(y, x, ctx), ctx);
                                        o.expect(back.first == y && back.second == x,
                                                 [&] { return "beta(alpha(y, x)) != (y, x) for x " + show(xs); });
                                    }
                                }
                            });
                            o.expect(weak == q * strong, [&] {
                                return where(f, {{"m", m}, {"n", n}}) + " v " + show(vs) + " prefix " + show(a) +
                                       " weak " + std::to_string(weak) + " strong " + std::to_string(strong);
                            });
                        });
                });
            }
    }
    return o;
}

Outcome ac10_tail_solver() {
    Outcome o;
    for (std::uint32_t q : {2u, 3u}) {
        const Field f = Field::prime(q);
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 2; ++n) {
                const std::size_t len = static_cast<std::size_t>(m + n + 1);
                oracle::each_tuple(q, static_cast<std::size_t>(m + 1), [&](const std::vector<Elem>& vs) {
                    if (vs.back() == 0) return;
                    const RowVector v(f, vs);
                    for (int k = 0; k <= m; ++k)
                        oracle::each_tuple(q, static_cast<std::size_t>(k), [&](const std::vector<Elem>& a) {
                            std::uint64_t solutions = 0;
                            oracle::each_tuple(q, len - a.size(), [&](const std::vector<Elem>& rest) {
                                std::vector<Elem> x(a);
                                x.insert(x.end(), rest.begin(), rest.end());
                                solutions += left_annihilates(v, materialize_hankel(SeqTuple(f, x), {m, n}));
                            });
                            o.expect(solutions == static_cast<std::uint64_t>(std::pow(q, m - k)), [&] {
                                return where(f, {{"m", m}, {"n", n}}) + " v " + show(vs) + " prefix " + show(a) +
                                       " has " + std::to_string(solutions) + " solutions";
                            });
                        });
                    oracle::each_tuple(q, static_cast<std::size_t>(m), [&](const std::vector<Elem>& head) {
                        const SeqTuple x = solve_tail(v, SeqTuple(f, head), n);
                        o.expect(left_annihilates(v, materialize_hankel(x, {m, n})),
                                 [&] { return "solve_tail output not annihilated for head " + show(head); });
                    });
                });
            }
    }
    return o;
}

Outcome ac11_square_plus_one() {
    Outcome o;
    for (std::uint64_t q : {2ull, 3ull}) {
        const Field f = Field::builtin(q);
        for (int n = 0; n + 1 <= 3; ++n) {
            const int m = n + 1;
            for (int k = 0; k <= m; ++k)
                oracle::each_tuple(f.order(), static_cast<std::size_t>(k), [&](const std::vector<Elem>& a) {
                    const Count got = brute_count_rank_le(CountQuery(m, n, m, SeqTuple(f, a)));
                    o.expect(got == power(q, m + n + 1 - k), [&] {
                        return where(f, {{"m", m}, {"n", n}}) + " prefix " + show(a) + " gave " + got.str();
                    });
                });
        }
    }
    return o;
}

Outcome ac12_monte_carlo() {
    Outcome o;
    const Field f = Field::prime(101);
    const auto start = std::chrono::steady_clock::now();
    const McEstimate e = monte_carlo_rank_le(CountQuery(4, 4, 4, SeqTuple(f, {})), 1'000'000, 7);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double target = 1.0 / 101;
    o.expect(std::abs(e.estimate - target) <= 4 * e.stderr_ && seconds < 120, [&] {
        std::ostringstream s;
        s << "estimate " << e.estimate << " stderr " << e.stderr_ << " in " << seconds << " s";
        return s.str();
    });
    return o;
}

Outcome ac13_job_invariance() {
    Outcome o;
    std::string outputs[2];
    int codes[2];
    const unsigned jobs[2] = {1, 4};
    for (int i = 0; i < 2; ++i) {
        std::ostringstream out, err;
        codes[i] = cli::run_cli({"verify", "--suite", "all", "--format", "json", "--jobs", std::to_string(jobs[i])},
                                out, err);
        outputs[i] = out.str();
    }
    o.expect(codes[0] == 0 && codes[1] == 0,
             [&] { return "exit codes " + std::to_string(codes[0]) + ", " + std::to_string(codes[1]); });
    o.expect(!outputs[0].empty() && outputs[0] == outputs[1], [] { return std::string("reports differ"); });
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, Outcome (*)()> criteria[] = {
        {"prefix-fixed counts", ac1_prefix_fixed},
        {"unrestricted counts", ac2_unrestricted},
        {"rank-exact census", ac3_rank_exact},
        {"singular square Hankel counts", ac4_determinant},
        {"Jacobi-Trudi singular counts", ac5_jacobi_trudi},
        {"adjacent-rank lemmas and fast threshold test", ac6_lemmas},
        {"kernel-count identity", ac7_kernel_identity},
        {"kernel-count sum", ac8_sumlast},
        {"alpha/beta bijection", ac9_bijection},
        {"tail solver", ac10_tail_solver},
        {"square-plus-one range", ac11_square_plus_one},
        {"Monte Carlo at Q=101", ac12_monte_carlo},
        {"job-count invariance", ac13_job_invariance},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.failure = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const bool ok = o.failure.empty();
        failed += !ok;
        std::cout << "AC" << index << ' ' << (ok ? "PASS" : "FAIL") << ' ' << name << " (" << o.points
                  << " checks, " << static_cast<long long>(ms) << " ms)";
        if (!ok) std::cout << ": " << o.failure;
        std::cout << std::endl;
    }
    return failed ? 1 : 0;
}
