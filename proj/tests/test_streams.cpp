#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "ambc/backward.hpp"
#include "ambc/channels.hpp"
#include "ambc/streams.hpp"

using namespace ambc;

TEST_CASE("stream cells at the three displayed altitudes") {
    std::vector<i64> A = {1, 3, 6}, B = {2, 4, 5};
    Stream s0(6, A, B, 0);
    CHECK(s0.period_cells() == std::vector<Cell>{{1, 2}, {3, 4}, {6, 5}});
    Stream s1(6, A, B, 1);
    CHECK(s1.period_cells() == std::vector<Cell>{{1, 4}, {3, 5}, {6, 8}});
    Stream sm1(6, A, B, -1);
    CHECK(sm1.period_cells() == std::vector<Cell>{{1, -1}, {3, 2}, {6, 4}});
    // SE-chain with (n,n)-invariance across a longer stretch
    auto cells = stream_cells(s1, -6, 18);
    for (size_t i = 0; i + 1 < cells.size(); ++i) CHECK(strictly_nw(cells[i], cells[i + 1]));
}

TEST_CASE("diagonal stream") {
    std::vector<i64> all = {1, 2, 3, 4};
    Stream s(4, all, all, 0);
    for (i64 t = 0; t < 4; ++t) CHECK(s.cell(t) == Cell{t + 1, t + 1});
}

TEST_CASE("defining data inverts stream cells") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        i64 n = 2 + static_cast<i64>(rng() % 7);
        i64 k = 1 + static_cast<i64>(rng() % n);
        std::vector<i64> pool(n);
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<i64> A(pool.begin(), pool.begin() + k);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<i64> B(pool.begin(), pool.begin() + k);
        i64 r = static_cast<i64>(rng() % 11) - 5;
        Stream s(n, A, B, r);
        CHECK(defining_data(n, stream_cells(s, 1 - 2 * n, 3 * n)) == s);
        CHECK(defining_data(n, s.period_cells()) == s);
    }
    CHECK_THROWS_AS(defining_data(4, {{1, 1}, {2, 2}, {1, 5}}), NotAStream);
    CHECK_THROWS_AS(defining_data(4, {{1, 2}, {2, 1}}), NotAStream);
}

TEST_CASE("compatibility") {
    Window empty = Window::empty(8);
    Stream any(8, {3, 7, 8}, {2, 3, 4}, 0);
    CHECK(is_compatible(empty, any));

    Window w = parse_window("[6,1,_,8,5,7,_,_]", 8);
    CHECK(is_compatible(w, any));

    Stream row_clash(8, {1, 7, 8}, {2, 3, 4}, 0);  // row 1 carries a ball
    CHECK_FALSE(is_compatible(w, row_clash));
    Stream col_clash(8, {3, 7, 8}, {2, 3, 6}, 0);  // column 6 carries a ball
    CHECK_FALSE(is_compatible(w, col_clash));
    Stream thin(8, {3}, {2}, 0);  // flow 1 < width 2
    CHECK_FALSE(is_compatible(w, thin));
}

TEST_CASE("concurrent altitude on the worked example") {
    CHECK(concurrent_altitude({2, 4, 6}, {3, 4, 5}, {1, 3, 5}, {1, 2, 6}, 6) == 1);
    CHECK(concurrent_altitude_by_river_scan({2, 4, 6}, {3, 4, 5}, {1, 3, 5}, {1, 2, 6}, 6) == 1);
    CHECK(concurrent_altitude_by_height({2, 4, 6}, {3, 4, 5}, {1, 3, 5}, {1, 2, 6}, 6) == 1);
}

TEST_CASE("concurrency is not symmetric") {
    CHECK(concurrent_altitude({3, 4, 5}, {1, 3, 5}, {1, 2, 6}, {2, 4, 6}, 6) == 0);
    CHECK(concurrent_altitude({1, 2, 6}, {2, 4, 6}, {3, 4, 5}, {1, 3, 5}, 6) != 0);
}

TEST_CASE("both concurrency routes agree on random classes") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        i64 n = 2 + static_cast<i64>(rng() % 5);
        i64 k = 1 + static_cast<i64>(rng() % (n / 2 > 0 ? n / 2 : 1));
        std::vector<i64> pool(n);
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<i64> A1(pool.begin(), pool.begin() + k);
        std::vector<i64> A2(pool.begin() + k, pool.begin() + 2 * k);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<i64> B1(pool.begin(), pool.begin() + k);
        std::vector<i64> B2(pool.begin() + k, pool.begin() + 2 * k);
        i64 direct = concurrent_altitude(A2, B2, A1, B1, n);
        CHECK(direct == concurrent_altitude_by_height(A2, B2, A1, B1, n));
        CHECK(direct == concurrent_altitude_by_river_scan(A2, B2, A1, B1, n));
    }
}

TEST_CASE("concurrent altitude is shift equivariant") {
    // st_{r+l}(A',B') is the unique stream of its class concurrent to st_l(A,B).
    std::vector<i64> A1 = {1, 3, 5}, B1 = {1, 2, 6}, A2 = {2, 4, 6}, B2 = {3, 4, 5};
    i64 r = concurrent_altitude(A2, B2, A1, B1, 6);
    for (i64 l = -2; l <= 2; ++l) {
        Stream S(6, A1, B1, l);
        auto one_river = [&](const Stream& T) {
            return rivers(backward_step(window_from_balls(6, T.period_cells()), S).next).size() == 1;
        };
        CHECK(one_river(Stream(6, A2, B2, r + l)));
        CHECK_FALSE(one_river(Stream(6, A2, B2, r + l - 1)));
        CHECK_FALSE(one_river(Stream(6, A2, B2, r + l + 1)));
    }
}

TEST_CASE("offset constants") {
    // strictly decreasing shape: all offsets vanish
    Tabloid P1;
    P1.rows = {{1, 2, 3}, {4, 5}, {6}};
    Tabloid Q1;
    Q1.rows = {{2, 4, 6}, {1, 3}, {5}};
    OffsetConstants off1 = offset_constants(P1, Q1, 6);
    CHECK(off1.r == std::vector<i64>{0, 0, 0});
    CHECK(off1.s == std::vector<i64>{0, 0, 0});

    // the five-row worked example with s = (0,0,0,0,1)
    Tabloid P;
    P.rows = {{1, 2, 3}, {5, 7, 10}, {4, 8, 11}, {12, 13}, {6, 9}};
    Tabloid Q;
    Q.rows = {{1, 2, 5}, {3, 8, 12}, {4, 10, 11}, {6, 13}, {7, 9}};
    OffsetConstants off = offset_constants(P, Q, 13);
    CHECK(off.s == std::vector<i64>{0, 0, 0, 0, 1});

    Tabloid bad;
    bad.rows = {{1, 2}};
    CHECK_THROWS_AS(offset_constants(P, bad, 13), ShapeMismatch);
}

TEST_CASE("stream JSON round trip") {
    Stream s(6, {1, 3, 6}, {2, 4, 5}, -2);
    CHECK(stream_from_json(stream_to_json(s), 6) == s);
    CHECK_THROWS_AS(stream_from_json("{\"A\":[1],\"B\":[1,2],\"r\":0}", 6), NotAStream);
    CHECK_THROWS_AS(stream_from_json("nope", 6), ParseError);
}
