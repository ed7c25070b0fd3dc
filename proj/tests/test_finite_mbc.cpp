#include "doctest.h"

#include <numeric>
#include <random>

#include "ambc/finite_mbc.hpp"

using namespace ambc;

TEST_CASE("zig-zag corner posts") {
    ZigZag single{{{3, 4}}};
    CornerPosts cp = zigzag_corner_posts(single);
    CHECK(cp.back == Cell{3, 4});
    CHECK(cp.inner == std::vector<Cell>{{3, 4}});
    CHECK(cp.outer.empty());

    ZigZag ell{{{2, 1}, {2, 2}, {1, 2}}};
    cp = zigzag_corner_posts(ell);
    CHECK(cp.back == Cell{1, 1});
    CHECK(cp.inner == std::vector<Cell>{{2, 1}, {1, 2}});  // zig-zag order
    CHECK(cp.outer == std::vector<Cell>{{2, 2}});

    CHECK_FALSE(ZigZag{{{1, 1}, {3, 1}}}.valid());   // not adjacent
    CHECK_FALSE(ZigZag{{{2, 2}, {1, 2}}}.valid());   // first step must be east
    CHECK_FALSE(ZigZag{{{1, 1}, {1, 2}}}.valid());   // last step must be north
    CHECK(ZigZag{{{2, 1}, {2, 2}, {1, 2}, {1, 3}}}.valid() == false);
    CHECK(ZigZag{{{3, 1}, {3, 2}, {2, 2}, {2, 3}, {1, 3}}}.valid());
}

TEST_CASE("zig-zag reconstruction helpers agree") {
    ZigZag z = zigzag_through_inner({{5, 2}, {3, 4}, {2, 7}});
    CornerPosts cp = zigzag_corner_posts(z);
    CHECK(cp.inner == std::vector<Cell>{{5, 2}, {3, 4}, {2, 7}});
    CHECK(cp.back == Cell{2, 2});
    ZigZag z2 = zigzag_from_back_and_outer(cp.back, cp.outer);
    CHECK(z2.cells == z.cells);
}

TEST_CASE("mbc step on the six-ball example") {
    Pnap p = Pnap::from_values({5, 6, 1, 3, 4, 2});
    MbcStep step = mbc_step(p);
    CHECK(step.p_row == std::vector<i64>{1, 2, 4});
    CHECK(step.q_row == std::vector<i64>{1, 2, 5});

    MbcResult r = mbc(p);
    CHECK(r.P.rows == std::vector<std::vector<i64>>{{1, 2, 4}, {3, 6}, {5}});
    CHECK(r.Q.rows == std::vector<std::vector<i64>>{{1, 2, 5}, {3, 4}, {6}});
    CHECK(r.P.valid());
    CHECK(r.Q.valid());
}

TEST_CASE("mbc trivial cases") {
    MbcStep one = mbc_step(Pnap::from_values({1}));
    CHECK(one.p_row == std::vector<i64>{1});
    CHECK(one.q_row == std::vector<i64>{1});
    CHECK(one.next.empty_of_balls());

    // [2,1]: both balls get number 1; one zig-zag; P first row must match the
    // bumping oracle [[1],[2]].
    MbcResult r = mbc(Pnap::from_values({2, 1}));
    CHECK(r.P.rows == std::vector<std::vector<i64>>{{1}, {2}});
    CHECK(r.Q.rows == std::vector<std::vector<i64>>{{1}, {2}});

    for (i64 k = 1; k <= 5; ++k) {
        std::vector<i64> word(k);
        std::iota(word.begin(), word.end(), 1);
        MbcResult inc = mbc(Pnap::from_values(word));
        CHECK(inc.P.rows == std::vector<std::vector<i64>>{word});
    }
}

TEST_CASE("mbc agrees with sequential bumping on all permutations of size <= 5") {
    for (i64 sz = 1; sz <= 5; ++sz) {
        std::vector<i64> word(sz);
        std::iota(word.begin(), word.end(), 1);
        do {
            MbcResult got = mbc(Pnap::from_values(word));
            StandardTableau p, q;
            for (size_t idx = 0; idx < word.size(); ++idx) {
                StandardTableau before = p;
                p = bump_insert(p, word[idx]);
                // recording: the row whose length grew
                size_t row = 0;
                while (row < before.rows.size() &&
                       before.rows[row].size() == p.rows[row].size())
                    ++row;
                if (row == q.rows.size()) q.rows.push_back({});
                q.rows[row].push_back(static_cast<i64>(idx + 1));
            }
            REQUIRE(got.P == p);
            REQUIRE(got.Q == q);
            REQUIRE(got.P.shape() == got.Q.shape());
        } while (std::next_permutation(word.begin(), word.end()));
    }
}

TEST_CASE("inverse mbc") {
    // singleton zig-zags from an empty permutation
    Pnap from_empty = mbc_inverse_step(Pnap{}, {4}, {3});
    CHECK(from_empty.balls() == std::vector<Cell>{{3, 4}});

    StandardTableau P{{{1, 3, 5}, {2, 6}, {4}}};
    StandardTableau Q{{{1, 4, 6}, {2, 5}, {3}}};
    Pnap w = mbc_inverse(P, Q);
    CHECK(w == Pnap::from_values({4, 2, 1, 6, 3, 5}));

    CHECK_THROWS_AS(mbc_inverse_step(Pnap::from_values({4}), {4}, {2}), Incompatible);
}

TEST_CASE("mbc round-trips through its inverse") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        i64 sz = 1 + static_cast<i64>(rng() % 5);
        std::vector<i64> word(sz);
        std::iota(word.begin(), word.end(), 1);
        std::shuffle(word.begin(), word.end(), rng);
        Pnap p = Pnap::from_values(word);
        MbcResult r = mbc(p);
        CHECK(mbc_inverse(r.P, r.Q) == p);
        MbcResult again = mbc(mbc_inverse(r.P, r.Q));
        CHECK(again.P == r.P);
        CHECK(again.Q == r.Q);
    }
}

TEST_CASE("bump insertion") {
    StandardTableau t{{{-4, 5}}};
    StandardTableau after = bump_insert(t, -2);
    CHECK(after.rows == std::vector<std::vector<i64>>{{-4, -2}, {5}});

    CHECK(bump_insert(StandardTableau{}, 7).rows == std::vector<std::vector<i64>>{{7}});

    StandardTableau inc;
    for (i64 v = 1; v <= 6; ++v) inc = bump_insert(inc, v);
    CHECK(inc.rows == std::vector<std::vector<i64>>{{1, 2, 3, 4, 5, 6}});
}
