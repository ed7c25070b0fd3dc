#include "doctest.h"

#include <numeric>
#include <random>

#include "ambc/asymptotic.hpp"
#include "ambc/forward.hpp"

using namespace ambc;

TEST_CASE("prefix insertion reproduces the worked sequence") {
    Window w = parse_window("[-4,5,-2,7,3,6]", 6);

    PrefixInsertion p1 = insert_prefix(w, 1);
    CHECK(p1.tableau.rows == std::vector<std::vector<i64>>{{-4}});
    CHECK(p1.residues.rows == std::vector<std::vector<i64>>{{2}});

    PrefixInsertion p3 = insert_prefix(w, 3);
    CHECK(p3.tableau.rows == std::vector<std::vector<i64>>{{-4, -2}, {5}});
    CHECK(p3.residues.rows == std::vector<std::vector<i64>>{{2, 4}, {5}});

    PrefixInsertion p7 = insert_prefix(w, 7);
    CHECK(p7.residues.rows == std::vector<std::vector<i64>>{{2, 2, 4, 6}, {1, 3}, {5}});

    PrefixInsertion p13 = insert_prefix(w, 13);
    CHECK(p13.tableau.rows ==
          std::vector<std::vector<i64>>{{-4, -2, 2, 4, 8, 12}, {3, 6, 9, 13}, {5, 7, 11}});
    CHECK(p13.residues.rows ==
          std::vector<std::vector<i64>>{{2, 2, 2, 4, 4, 6}, {1, 3, 3, 6}, {1, 5, 5}});
}

TEST_CASE("stabilization of the worked example") {
    Window w = parse_window("[-4,5,-2,7,3,6]", 6);
    Stabilization st = stabilized_p(w);
    CHECK(st.p.rows == std::vector<std::vector<i64>>{{2, 4}, {3, 6}, {1, 5}});
    CHECK(st.p == phi(w).P);
    CHECK(st.start <= 7);  // bar P_13 already equals bar P_7 + P
}

TEST_CASE("identity stabilizes immediately to a single row") {
    Window w = parse_window("[1,2,3,4]", 4);
    Stabilization st = stabilized_p(w);
    CHECK(st.start == 1);
    CHECK(st.p.rows == std::vector<std::vector<i64>>{{1, 2, 3, 4}});
}

TEST_CASE("stabilized tabloid equals the forward P on random windows") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 60; ++trial) {
        i64 n = 1 + static_cast<i64>(rng() % 4);
        std::vector<i64> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::optional<i64>> e(n);
        for (i64 i = 0; i < n; ++i) e[i] = perm[i] + n * (static_cast<i64>(rng() % 5) - 2);
        Window w(n, std::move(e));
        OmegaTriple t = phi(w);
        CHECK(stabilized_p(w).p == t.P);
        CHECK(stabilized_p(inverse(w)).p == t.Q);
    }
}

TEST_CASE("an exhausted budget reports no stabilization") {
    CHECK_THROWS_AS(stabilized_p(parse_window("[2,1]", 2), 0), NoStabilization);
}
