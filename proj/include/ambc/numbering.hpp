#pragma once

#include <map>

#include "ambc/core.hpp"

namespace ambc {

// Semi-periodic numbering of ball (or cell) translate classes: the value at
// b + (n,n) is the value at b plus `period`. Keys are row residue
// representatives in [1, n].
struct Numbering {
    i64 n = 0;
    i64 period = 0;
    std::map<i64, i64> values;  // row rep -> value at the representative

    bool defined_at_row(i64 row) const { return values.count(residue_rep(row, n)) > 0; }

    i64 eval(const Cell& c) const {
        i64 rep = residue_rep(c.row, n);
        i64 k = (c.row - rep) / n;
        return values.at(rep) + k * period;
    }

    friend bool operator==(const Numbering&, const Numbering&) = default;
};

}  // namespace ambc
