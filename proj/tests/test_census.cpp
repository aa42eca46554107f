#include <cmath>

#include "doctest.h"
#include "hankel/census.hpp"
#include "hankel/errors.hpp"
#include "oracles.hpp"

using namespace hankel;

namespace {

SeqTuple empty(const Field& f) { return {f, {}}; }

// Direct oracle count: every completion, rank by minors.
std::uint64_t oracle_count(const Field& f, int m, int n, int r, const std::vector<Elem>& a) {
    std::uint64_t hits = 0;
    oracle::each_tuple(f.order(), static_cast<std::size_t>(m + n + 1) - a.size(), [&](const std::vector<Elem>& rest) {
        std::vector<Elem> x(a);
        x.insert(x.end(), rest.begin(), rest.end());
        hits += oracle::rank_by_minors(f, oracle::hankel(x, m, n), static_cast<std::size_t>(n + 1)) <=
                static_cast<std::size_t>(r);
    });
    return hits;
}

}  // namespace

TEST_CASE("query ranges") {
    const Field f = Field::prime(3);
    CHECK(CountQuery(2, 3, 1, empty(f)).range() == QueryRange::Bounded);
    CHECK(CountQuery(2, 1, 2, SeqTuple(f, {1})).range() == QueryRange::SquarePlusOne);
    CHECK(CountQuery(2, 2, 0, SeqTuple(f, {1})).range() == QueryRange::Outside);
    CHECK(CountQuery(2, 2, 3, empty(f)).range() == QueryRange::Outside);
    CHECK_THROWS_AS(CountQuery(1, 1, 1, SeqTuple(f, {0, 0, 0, 0})), UsageError);
    CHECK_THROWS_AS(CountQuery(-1, 1, 0, empty(f)), UsageError);
}

TEST_CASE("prefix-fixed closed form") {
    const Field f2 = Field::prime(2);
    CHECK(count_rank_le_formula(CountQuery(2, 3, 1, empty(f2))) == 4);
    for (std::uint64_t q : {2ull, 3ull, 5ull}) {
        const Field f = Field::builtin(q);
        CHECK(count_rank_le_formula(CountQuery(3, 3, 2, SeqTuple(f, {0, 1}))) == q * q);
    }
    const Field f3 = Field::prime(3);
    CHECK(count_rank_le_formula(CountQuery(2, 1, 2, SeqTuple(f3, {1}))) == 27);
    CHECK_THROWS_AS(count_rank_le_formula(CountQuery(2, 2, 0, SeqTuple(f3, {1}))), UsageError);
}

TEST_CASE("rank-exact closed form") {
    const Field f2 = Field::prime(2);
    CHECK(count_rank_eq_formula(f2, 3, 4, 0) == 1);
    CHECK(count_rank_eq_formula(f2, 1, 1, 1) == 3);
    CHECK(count_rank_eq_formula(f2, 1, 1, 2) == 4);
    CHECK(count_rank_eq_formula(f2, 1, 1, 3) == 0);
    CHECK_THROWS_AS(count_rank_eq_formula(f2, 2, 1, 1), UsageError);
}

TEST_CASE("determinant and Jacobi-Trudi closed forms") {
    const Field f2 = Field::prime(2), f3 = Field::prime(3);
    CHECK(count_det_zero_formula(f2, 1, 0) == 4);
    CHECK(count_det_zero_formula(f3, 2, 2) == 9);
    CHECK(count_det_zero_formula(f3, 4, 4) == 81);
    CHECK_THROWS_AS(count_det_zero_formula(f3, 1, 2), UsageError);
    CHECK(count_jt_singular_formula(f2, 2, 5) == 32);
    CHECK(count_jt_singular_formula(f3, 1, 1) == 1);
    CHECK(count_jt_singular_formula(f2, 2, 2) == 4);
    CHECK_THROWS_AS(count_jt_singular_formula(f2, 0, 3), UsageError);
    CHECK_THROWS_AS(count_jt_singular_formula(f2, 3, 0), UsageError);
}

TEST_CASE("brute counts") {
    const Field f2 = Field::prime(2);
    CHECK(brute_count_rank_le(CountQuery(2, 3, 1, empty(f2))) == 4);
    CHECK(brute_count_rank_le(CountQuery(2, 3, 1, SeqTuple(f2, {1}))) == 2);
    CHECK(brute_count_rank_le(CountQuery(1, 1, 1, empty(f2))) == 4);
    CHECK(brute_count_jt_singular(f2, 2, 2) == 4);
    CHECK(brute_count_jt_singular(f2, 2, 5) == 32);
    CHECK(brute_count_jt_singular(f2, 2, 5, {}, JtPath::Direct) == 32);
    const Field f3 = Field::prime(3);
    CHECK(brute_count_jt_singular(f3, 1, 3) == 9);
    CHECK_THROWS_AS(brute_count_jt_singular(f3, 0, 3), UsageError);
}

TEST_CASE("brute counts agree with the minor-based oracle, including outside the closed-form range") {
    for (std::uint64_t q : {2ull, 3ull}) {
        const Field f = Field::builtin(q);
        for (int m = 0; m <= 2; ++m) {
            for (int n = 0; n <= 2; ++n) {
                for (int r = 0; r <= 3; ++r) {
                    for (int k = 0; k <= 2 && k <= m + n + 1; ++k) {
                        const std::vector<Elem> a(static_cast<std::size_t>(k), 1);
                        CHECK(brute_count_rank_le(CountQuery(m, n, r, SeqTuple(f, a))) ==
                              oracle_count(f, m, n, r, a));
                    }
                }
            }
        }
    }
}

TEST_CASE("census distributions") {
    const Field f2 = Field::prime(2);
    const RankDistribution d = brute_census(f2, 1, 1, empty(f2));
    CHECK(d.counts.at(0) == 1);
    CHECK(d.counts.at(1) == 3);
    CHECK(d.counts.at(2) == 4);
    CHECK(d.total == 8);
    CHECK(brute_census(f2, 1, 1, SeqTuple(f2, {0})).total == 4);
    for (std::uint64_t q : {2ull, 3ull}) {
        const Field f = Field::builtin(q);
        for (int m = 0; m <= 3; ++m) {
            for (int n = 0; n <= 3; ++n) {
                const RankDistribution dist = brute_census(f, m, n, SeqTuple(f, {1}));
                Count sum = 0;
                for (const auto& [rho, c] : dist.counts) {
                    sum += c;
                    CHECK(rho <= static_cast<std::size_t>(std::min(m, n) + 1));
                }
                CHECK(sum == dist.total);
                CHECK(dist.total == count_pow(q, m + n));
                // Partial sums reproduce the threshold counts.
                Count partial = 0;
                for (int r = 0; r <= std::min(m, n) + 1; ++r) {
                    partial += dist.counts.at(static_cast<std::size_t>(r));
                    CHECK(partial == brute_count_rank_le(CountQuery(m, n, r, SeqTuple(f, {1}))));
                }
            }
        }
    }
}

TEST_CASE("determinant brute count") {
    for (std::uint64_t q : {2ull, 3ull}) {
        const Field f = Field::builtin(q);
        for (int n = 0; n <= 2; ++n) {
            for (int k = 0; k <= n; ++k) {
                oracle::each_tuple(f.order(), static_cast<std::size_t>(k), [&](const std::vector<Elem>& a) {
                    CHECK(brute_count_det_zero(f, n, SeqTuple(f, a)) == count_det_zero_formula(f, n, k));
                });
            }
        }
    }
}

TEST_CASE("work cap") {
    const Field f2 = Field::prime(2);
    CHECK_THROWS_AS(brute_count_rank_le(CountQuery(20, 20, 20, empty(f2))), ResourceError);
    try {
        brute_count_rank_le(CountQuery(3, 3, 1, empty(f2)), {100, 1});
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(e.required_work() == "128");
    }
    CHECK(brute_count_rank_le(CountQuery(3, 3, 1, empty(f2)), {128, 1}) == 4);
    CHECK_THROWS_AS(brute_census(f2, 3, 3, empty(f2), {127, 1}), ResourceError);
    CHECK_THROWS_AS(brute_count_jt_singular(f2, 3, 3, {16, 1}), ResourceError);
}

TEST_CASE("parallel enumeration matches sequential and slice sums") {
    const Field f3 = Field::prime(3);
    const CountQuery q(3, 3, 2, SeqTuple(f3, {2}));
    const Count seq = brute_count_rank_le(q, {kDefaultCap, 1});
    for (unsigned jobs : {2u, 3u, 4u, 7u}) CHECK(brute_count_rank_le(q, {kDefaultCap, jobs}) == seq);
    // Split by the first free entry and add the parts.
    Count parts = 0;
    for (Elem a1 = 0; a1 < 3; ++a1) parts += brute_count_rank_le(CountQuery(3, 3, 2, SeqTuple(f3, {2, a1})));
    CHECK(parts == seq);
    const RankDistribution d1 = brute_census(f3, 2, 3, empty(f3), {kDefaultCap, 1});
    const RankDistribution d4 = brute_census(f3, 2, 3, empty(f3), {kDefaultCap, 4});
    CHECK(d1.counts == d4.counts);
}

TEST_CASE("element sampler") {
    ElementSampler a(101, 42), b(101, 42);
    std::vector<std::uint64_t> hist(101, 0);
    for (int i = 0; i < 101000; ++i) {
        const Elem x = a.next();
        REQUIRE(x < 101);
        CHECK(x == b.next());
        ++hist[x];
    }
    // Chi-square with 100 degrees of freedom; 200 is far in the tail.
    double chi2 = 0;
    for (auto h : hist) chi2 += (h - 1000.0) * (h - 1000.0) / 1000.0;
    CHECK(chi2 < 200);
    ElementSampler two(2, 7);
    int ones = 0;
    for (int i = 0; i < 10000; ++i) ones += two.next();
    CHECK(std::abs(ones - 5000) < 400);
}

TEST_CASE("Monte Carlo estimates") {
    const Field f = Field::prime(7);
    const CountQuery square_plus_one(2, 1, 2, empty(f));
    const McEstimate all = monte_carlo_rank_le(square_plus_one, 1000, 3);
    CHECK(all.estimate == 1.0);
    CHECK(all.stderr_ == 0.0);
    CHECK(all.within(kMonteCarloSigmas));

    const CountQuery q(2, 2, 2, empty(f));
    const McEstimate e1 = monte_carlo_rank_le(q, 50000, 11);
    const McEstimate e2 = monte_carlo_rank_le(q, 50000, 11, 4);
    CHECK(e1.hits == e2.hits);
    REQUIRE(e1.target);
    CHECK(*e1.target == doctest::Approx(1.0 / 7));
    CHECK(e1.within(kMonteCarloSigmas));
    CHECK(monte_carlo_rank_le(q, 50000, 12).hits != e1.hits);
    CHECK_FALSE(monte_carlo_rank_le(CountQuery(2, 2, 0, SeqTuple(f, {1})), 10, 1).target);
    CHECK_THROWS_AS(monte_carlo_rank_le(q, 0, 1), UsageError);
}

TEST_CASE("verify grids") {
    VerifyOptions opts;
    opts.fields = {Field::prime(2)};
    opts.suites = {Suite::Theorems};
    opts.max_n = 3;
    auto records = verify(opts);
    REQUIRE(!records.empty());
    for (const auto& r : records) CHECK(r.verdict == Verdict::Match);

    opts.fields = {Field::prime(3)};
    opts.max_n = 2;
    for (const auto& r : verify(opts)) CHECK(r.verdict == Verdict::Match);

    opts.formula_perturbation = 1;
    records = verify(opts);
    std::size_t mismatches = 0;
    for (const auto& r : records) {
        if (r.formula) {
            CHECK(r.verdict == Verdict::Mismatch);
            CHECK(!r.first_failure.empty());
        }
        mismatches += r.verdict == Verdict::Mismatch;
    }
    CHECK(mismatches > 0);
}

TEST_CASE("verify turns cap overruns into skipped records") {
    VerifyOptions opts;
    opts.fields = {Field::prime(2)};
    opts.suites = all_suites();
    opts.engine.cap = 16;
    const auto records = verify(opts);
    std::size_t skipped = 0;
    for (const auto& r : records) {
        CHECK(r.verdict != Verdict::Mismatch);
        if (r.verdict == Verdict::Skipped) {
            ++skipped;
            CHECK(!r.note.empty());
        }
    }
    CHECK(skipped > 0);
}

TEST_CASE("suite names and default bounds") {
    for (Suite s : all_suites()) CHECK(parse_suite(to_string(s)) == s);
    CHECK_FALSE(parse_suite("bogus"));
    CHECK(default_bound(Suite::Lemmas, 2) == 6);
    CHECK(default_bound(Suite::Lemmas, 3) == 4);
    CHECK(default_bound(Suite::Theorems, 4) == 3);
    CHECK(default_bound(Suite::Jt, 2) == 6);
    CHECK(default_bound(Suite::Jt, 3) == 6);
}
