#pragma once

#include <vector>

#include "ambc/core.hpp"
#include "ambc/finite_mbc.hpp"
#include "ambc/tabloid.hpp"

namespace ambc {

// Rows as sorted multisets of residues; intermediate insertions may repeat.
struct ResidueTabloid {
    std::vector<std::vector<i64>> rows;

    friend bool operator==(const ResidueTabloid&, const ResidueTabloid&) = default;
};

struct PrefixInsertion {
    StandardTableau tableau;
    ResidueTabloid residues;
};

// Bump-insert w(1), ..., w(i) of the periodic sequence and reduce mod n.
PrefixInsertion insert_prefix(const Window& w, i64 count);

struct Stabilization {
    Tabloid p;
    i64 start;  // smallest index at which the periodic increment is constant
};

// Detect the index i0 from which residue tabloids grow by one fixed tabloid
// per period: for every i in [i0, i0 + 3n], diff(P_{i+n}, P_i) equals a fixed
// tabloid with distinct residues. Throws NoStabilization past the budget.
Stabilization stabilized_p(const Window& w, i64 max_periods = 60);

}  // namespace ambc
