#include "doctest.h"
#include "hankel/errors.hpp"
#include "hankel/ranklaw.hpp"
#include "oracles.hpp"

using namespace hankel;

TEST_CASE("rank_pair") {
    const Field f2 = Field::prime(2);
    const SeqTuple zero(f2, std::vector<Elem>(6, 0));
    const RankPair z = rank_pair(zero, 3, 3);
    CHECK(z.rank_tall == 0);
    CHECK(z.rank_wide == 0);

    const SeqTuple x(f2, {0, 0, 0, 0, 0, 1});
    const RankPair rp = rank_pair(x, 3, 3);
    CHECK(rp.rank_tall == rank_gauss(materialize_hankel(x, {3, 2})));
    CHECK(rp.rank_wide == rank_gauss(materialize_hankel(x, {2, 3})));
    CHECK(rp.rank_tall == 1);
    CHECK(rp.rank_wide == 1);

    // q = 0 uses the empty tall matrix.
    const RankPair edge = rank_pair(x, 2, 0);
    CHECK(edge.rank_tall == 0);
    CHECK_THROWS_AS(rank_pair(x, 4, 4), UsageError);
    CHECK_THROWS_AS(rank_pair(x, -1, 2), UsageError);
}

TEST_CASE("full tall rank forces wide rank") {
    const Field f = Field::prime(3);
    for (int p = 0; p <= 3; ++p) {
        for (int q = 0; p + q <= 5; ++q) {
            oracle::each_tuple(3, 5, [&](const std::vector<Elem>& x) {
                const RankPair rp = rank_pair(SeqTuple(f, x), p, q);
                if (rp.rank_tall > static_cast<std::size_t>(p)) {
                    CHECK(rp.rank_wide == static_cast<std::size_t>(p));
                }
                CHECK(check_adjacent_ranks(rp, p, q).all());
            });
        }
    }
}

TEST_CASE("adjacent-rank checker flags violations") {
    // A made-up pair that violates the chain must be reported.
    const AdjacentRankCheck c = check_adjacent_ranks({2, 1}, 3, 3);
    CHECK_FALSE(c.tall_bounded_implies_le);
    CHECK_FALSE(c.both_bounded_implies_eq);
    CHECK_FALSE(c.all());
    CHECK_FALSE(check_threshold_equivalence({1, 2}, 1));
}

TEST_CASE("rank_le_fast") {
    const Field f2 = Field::prime(2);
    CHECK(rank_le_fast(SeqTuple(f2, std::vector<Elem>(7, 0)), 3, 3, 3));
    CHECK(rank_le_fast(SeqTuple(f2, {0, 0, 0, 0, 0, 1}), 2, 3, 1));
    oracle::each_tuple(2, 7, [&](const std::vector<Elem>& x) {
        const SeqTuple xt(f2, x);
        const std::size_t direct = rank_gauss(materialize_hankel(xt, {3, 3}));
        for (int r = 0; r <= 3; ++r) CHECK(rank_le_fast(xt, 3, 3, r) == (direct <= static_cast<std::size_t>(r)));
        const auto [rank, shape] = rank_via_reduction(xt, 3, 3);
        CHECK(rank == direct);
        CHECK(shape.valid_for(7));
    });
    CHECK_THROWS_AS(rank_le_fast(SeqTuple(f2, {0, 0, 0}), 1, 1, 2), UsageError);
    CHECK_THROWS_AS(rank_le_fast(SeqTuple(f2, {0, 0}), 1, 1, 1), UsageError);
}

TEST_CASE("kernel-count identity") {
    const Field f2 = Field::prime(2);
    const auto zero = elkies_identity_sides(SeqTuple(f2, {0, 0, 0}), 1, 1);
    CHECK(zero.first == 1);
    CHECK(zero.second == 1);

    const Field f3 = Field::prime(3);
    std::size_t full = 0;
    oracle::each_tuple(3, 5, [&](const std::vector<Elem>& x) {
        const SeqTuple xt(f3, x);
        const auto fast = elkies_identity_sides(xt, 2, 2);
        const auto slow = elkies_sides_by_enumeration(xt, 2, 2);
        CHECK(fast.first == fast.second);
        CHECK(slow == fast);
        if (rank_gauss(materialize_hankel(xt, {2, 2})) == 3) {
            ++full;
            CHECK(fast.first == 0);
            CHECK(fast.second == 0);
        }
    });
    CHECK(full > 0);
    CHECK_THROWS_AS(elkies_identity_sides(SeqTuple(f3, std::vector<Elem>(5, 0)), 3, 1), UsageError);
}

TEST_CASE("kernel_count_nonzero") {
    const Field f5 = Field::prime(5);
    CHECK(kernel_count_nonzero(DenseMatrix::identity(f5, 2)) == 0);
    const Field f3 = Field::prime(3);
    CHECK(kernel_count_nonzero(DenseMatrix(f3, 2, 3)) == 8);
    const Field f2 = Field::prime(2);
    const DenseMatrix h = materialize_hankel(SeqTuple(f2, {0, 0, 0, 1}), {1, 2});
    CHECK(kernel_count_nonzero(h) == 1);
    oracle::Mat m{{0, 0, 0}, {0, 0, 1}};
    CHECK(oracle::left_kernel_count(f2, m, 3) == 1);
}

TEST_CASE("roll-call: kernel counts match literal enumeration") {
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        const Field f = Field::builtin(q);
        for (int rdeg = 0; rdeg <= 3; ++rdeg) {
            const int cdeg = 4 - rdeg;
            oracle::each_tuple(f.order(), 5, [&](const std::vector<Elem>& x) {
                const DenseMatrix h = materialize_hankel(SeqTuple(f, x), {rdeg, cdeg});
                oracle::Mat m(h.rows(), std::vector<Elem>(h.cols()));
                for (std::size_t i = 0; i < h.rows(); ++i)
                    for (std::size_t j = 0; j < h.cols(); ++j) m[i][j] = h.at(i, j);
                CHECK(kernel_count_nonzero(h) == oracle::left_kernel_count(f, m, h.cols()));
            });
        }
    }
}

TEST_CASE("count_pow") {
    CHECK(count_pow(2, 0) == 1);
    CHECK(count_pow(3, 4) == 81);
    CHECK(count_pow(101, 20).str() == "12201900399479668244827490915525641902001");
}
