#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "ambc/backward.hpp"
#include "ambc/forward.hpp"
#include "ambc/shi_poset.hpp"
#include "ambc/verify.hpp"

using namespace ambc;

TEST_CASE("forward map on the worked three-row example") {
    Window w = parse_window("[1,2,17,5,14,18,20]", 7);

    Numbering d = sw_numbering(w);
    ForwardStep step1 = forward_step(w, d);
    CHECK(step1.stream == Stream(7, {3, 6, 7}, {1, 2, 5}, 3));

    ForwardStep step2 = forward_step(step1.next, sw_numbering(step1.next));
    CHECK(step2.stream == Stream(7, {2, 4, 5}, {4, 6, 7}, 3));

    ForwardStep step3 = forward_step(step2.next, sw_numbering(step2.next));
    CHECK(step3.stream == Stream(7, {1}, {3}, 1));
    CHECK(step3.next.is_empty());

    OmegaTriple t = phi(w);
    CHECK(t.P.rows == std::vector<std::vector<i64>>{{1, 2, 5}, {4, 6, 7}, {3}});
    CHECK(t.Q.rows == std::vector<std::vector<i64>>{{3, 6, 7}, {2, 4, 5}, {1}});
    CHECK(t.rho == Weight{3, 3, 1});
}

TEST_CASE("forward map P-tabloid of the insertion example") {
    OmegaTriple t = phi(parse_window("[-4,5,-2,7,3,6]", 6));
    CHECK(t.P.rows == std::vector<std::vector<i64>>{{2, 4}, {3, 6}, {1, 5}});
}

TEST_CASE("backward map on the worked triple") {
    OmegaTriple t;
    t.n = 7;
    t.P.rows = {{1, 4, 5, 7}, {3, 6}, {2}};
    t.Q.rows = {{2, 3, 5, 7}, {1, 4}, {6}};
    t.rho = {2, 0, 1};
    CHECK(to_text(psi(t)) == "[1,6,9,7,10,5,11]");
}

TEST_CASE("identity maps to a single-row triple with zero weight") {
    Window w = parse_window("[1,2,3]", 3);
    OmegaTriple t = phi(w);
    CHECK(t.P.rows == std::vector<std::vector<i64>>{{1, 2, 3}});
    CHECK(t.Q.rows == std::vector<std::vector<i64>>{{1, 2, 3}});
    CHECK(t.rho == Weight{0});
    CHECK(psi(t) == w);
    // identity forward step: empty next, diagonal stream of altitude 0
    ForwardStep fs = forward_step(w, sw_numbering(w));
    CHECK(fs.next.is_empty());
    CHECK(fs.stream == Stream(3, {1, 2, 3}, {1, 2, 3}, 0));
}

TEST_CASE("psi of the empty triple is empty; phi of empty is empty") {
    OmegaTriple t;
    t.n = 4;
    CHECK(psi(t).is_empty());
    CHECK(phi(Window::empty(4)) == OmegaTriple{4, {}, {}, {}});
}

TEST_CASE("psi rejects malformed triples") {
    OmegaTriple t;
    t.n = 4;
    t.P.rows = {{1, 2}, {3, 4}};
    t.Q.rows = {{1, 2}, {3}};
    t.rho = {0, 0};
    CHECK_THROWS_AS(psi(t), InvalidTriple);
    t.Q.rows = {{1, 2}, {1, 3}};
    CHECK_THROWS_AS(psi(t), InvalidTriple);
    t.Q.rows = {{1, 2}, {3, 4}};
    t.rho = {0};
    CHECK_THROWS_AS(psi(t), InvalidTriple);
    t.rho = {0, 0};
    CHECK_NOTHROW(psi(t));
    OmegaTriple grow;
    grow.n = 4;
    grow.P.rows = {{1}, {2, 3}};
    grow.Q.rows = {{1}, {2, 3}};
    grow.rho = {0, 0};
    CHECK_THROWS_AS(psi(grow), InvalidTriple);
}

TEST_CASE("round-trip on a small enumeration") {
    for (const Window& w : enumerate_windows(3, 1)) {
        OmegaTriple t = phi(w);
        CHECK(psi(t) == w);
    }
}

TEST_CASE("round-trip on partial permutations") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        i64 n = 2 + static_cast<i64>(rng() % 4);
        std::vector<i64> rows(n), cols(n);
        std::iota(rows.begin(), rows.end(), 1);
        std::iota(cols.begin(), cols.end(), 1);
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        i64 defined = 1 + static_cast<i64>(rng() % n);
        std::vector<std::optional<i64>> e(n);
        for (i64 i = 0; i < defined; ++i)
            e[rows[i] - 1] = cols[i] + n * (static_cast<i64>(rng() % 5) - 2);
        Window w(n, std::move(e));
        CHECK(psi(phi(w)) == w);
    }
}

TEST_CASE("transpose symmetry: Q(w) = P of the inverse") {
    for (const Window& w : enumerate_windows(3, 1)) {
        OmegaTriple t = phi(w);
        OmegaTriple ti = phi(inverse(w));
        CHECK(t.Q == ti.P);
        CHECK(t.P == ti.Q);
    }
}

TEST_CASE("numbering policy changes rho at most") {
    Window w = parse_window("[6,1,8,3,10,5]", 6);
    CHECK(!(sw_numbering(w) == ne_numbering(w)));
    OmegaTriple sw = phi(w);
    OmegaTriple ne = phi_with_numbering_policy(w, NumberingPolicy::NE);
    CHECK(sw.P == ne.P);
    CHECK(sw.Q == ne.Q);

    Window single = parse_window("[4,2,3]", 3);  // single channel
    CHECK(all_channels(single).size() == 1);
    CHECK(phi(single) == phi_with_numbering_policy(single, NumberingPolicy::NE));
}

TEST_CASE("forward then backward per-step identity for every channel") {
    for (const Window& w : enumerate_windows(3, 1)) {
        for (const Channel& c : all_channels(w)) {
            Numbering d = channel_numbering(w, c);
            ForwardStep fs = forward_step(w, d);
            if (fs.next.is_empty()) {
                Window back = backward_step(Window::empty(w.n()), fs.stream).next;
                CHECK(back == w);
            } else {
                Window back = backward_step(fs.next, fs.stream).next;
                CHECK(back == w);
            }
        }
    }
}

TEST_CASE("stream numbering of a lone ball follows the last cell to its northwest") {
    Stream s(5, {2, 4}, {1, 3}, 0);
    std::vector<std::optional<i64>> e(5);
    e[4] = 5;  // ball (5,5)
    Window w(5, std::move(e));
    Numbering d0 = stream_numbering(w, s);
    // cells ... (2,1)->1, (4,3)->2, (7,6)->3; the last one NW of (5,5) is (4,3)
    CHECK(d0.eval(Cell{5, 5}) == 2);
    CHECK(d0.period == 2);
}

TEST_CASE("already-monotone stream numbering is returned unchanged") {
    Stream s(6, {1, 2}, {1, 2}, 0);
    std::vector<std::optional<i64>> e(6);
    e[2] = 4;  // balls (3,4) and (4,3): NE-incomparable, both numbered 2
    e[3] = 3;
    Window w(6, std::move(e));
    Numbering d0 = stream_numbering(w, s);
    CHECK(d0.eval(Cell{3, 4}) == 2);
    CHECK(d0.eval(Cell{4, 3}) == 2);
    CHECK(backward_numbering(w, s) == d0);
}

TEST_CASE("backward numbering equals the stream numbering somewhere") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        i64 n = 3 + static_cast<i64>(rng() % 4);
        std::vector<i64> rows(n), cols(n);
        std::iota(rows.begin(), rows.end(), 1);
        std::iota(cols.begin(), cols.end(), 1);
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        i64 defined = 1 + static_cast<i64>(rng() % (n - 1));
        std::vector<std::optional<i64>> e(n);
        for (i64 i = 0; i < defined; ++i)
            e[rows[i] - 1] = cols[i] + n * (static_cast<i64>(rng() % 3) - 1);
        Window w(n, std::move(e));
        i64 wd = width(shi_poset(w));
        i64 avail = n - defined;
        if (avail < wd || wd == 0) continue;
        std::vector<i64> A(rows.begin() + defined, rows.begin() + defined + wd);
        std::vector<i64> B(cols.begin() + defined, cols.begin() + defined + wd);
        Stream s(n, A, B, static_cast<i64>(rng() % 5) - 2);
        if (!is_compatible(w, s)) continue;

        Numbering d0 = stream_numbering(w, s);
        Numbering d = backward_numbering(w, s);
        CHECK(d.period == s.flow());
        bool touches = false;
        for (const auto& [row, v] : d.values)
            if (d0.values.at(row) == v) touches = true;
        CHECK(touches);

        // order-of-choices independence: random pick orders agree
        for (int run = 0; run < 3; ++run) {
            std::mt19937_64 pick_rng(rng());
            auto pick = [&](const std::vector<Cell>& cands) -> size_t {
                return pick_rng() % cands.size();
            };
            CHECK(backward_numbering(w, s, 0, pick) == d);
        }

        // shifting the stream anchor shifts the numbering, and leaves the
        // backward step's output unchanged
        Numbering shifted = backward_numbering(w, s, 5);
        for (const auto& [row, v] : d.values) CHECK(shifted.values.at(row) == v + 5);
        CHECK(backward_step(w, s, 5).next == backward_step(w, s).next);

        // the induced numbering is a channel numbering of the output
        BackwardStepResult bs = backward_step(w, s);
        bool matches_some_channel = false;
        for (const Channel& c : all_channels(bs.next)) {
            Numbering cn = channel_numbering(bs.next, c,
                                             std::make_pair(c.generator[0], bs.induced.eval(c.generator[0])));
            if (cn == bs.induced) matches_some_channel = true;
        }
        CHECK(matches_some_channel);

        // width of the new Shi poset equals the flow
        CHECK(width(shi_poset(bs.next)) == s.flow());

        // when flow = width, channels of w are numbered consecutively
        if (s.flow() == wd && !w.is_empty()) {
            for (const Channel& c : all_channels(w)) {
                for (i64 t = 0; t + 1 < c.density(); ++t)
                    CHECK(d.eval(c.cell(t)) + 1 == d.eval(c.cell(t + 1)));
            }
        }

        // zig-zag cells are pairwise disjoint
        BackwardStepResult with_cells = backward_step(w, s, 0, true);
        std::set<Cell> seen;
        i64 total_cells = 0;
        for (const ZigZagLevel& zl : with_cells.levels)
            for (const Cell& cell : zl.zigzag_cells) {
                ++total_cells;
                CHECK(seen.insert(cell).second);
            }
        CHECK(total_cells > 0);
    }
}

TEST_CASE("backward step from the empty permutation lays down the stream") {
    Stream s1(7, {6}, {2}, 1);
    Window w1 = backward_step(Window::empty(7), s1).next;
    CHECK(w1 == window_from_balls(7, s1.period_cells()));

    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        i64 n = 2 + static_cast<i64>(rng() % 5);
        i64 k = 1 + static_cast<i64>(rng() % n);
        std::vector<i64> pool(n);
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<i64> A(pool.begin(), pool.begin() + k);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<i64> B(pool.begin(), pool.begin() + k);
        Stream s(n, A, B, static_cast<i64>(rng() % 7) - 3);
        CHECK(backward_step(Window::empty(n), s).next == window_from_balls(n, s.period_cells()));
    }
}

TEST_CASE("incompatible stream is rejected") {
    Window w = parse_window("[2,1]", 2);
    Stream s(2, {1}, {2}, 0);
    CHECK_THROWS_AS(stream_numbering(w, s), Incompatible);
    CHECK_THROWS_AS(backward_numbering(w, s), Incompatible);
    CHECK_THROWS_AS(backward_step(w, s), Incompatible);
}
