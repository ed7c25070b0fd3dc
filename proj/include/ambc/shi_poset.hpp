#pragma once

#include <vector>

#include "ambc/core.hpp"

namespace ambc {

// Shi poset on the defined residues of a partial permutation: i <=_S j iff
// (i > j and w(i) < w(j)) or w(j) > w(i) + n, closed transitively. Element i
// carries the label residue(w(i)). Equivalent to the southwest order on ball
// translate classes.
struct ShiPoset {
    i64 n = 0;
    std::vector<i64> elements;            // defined row residues, sorted, in [1, n]
    std::vector<std::vector<bool>> le;    // le[a][b]: elements[a] <=_S elements[b]
    std::vector<i64> labels;              // residue of w(elements[a])

    i64 size() const { return static_cast<i64>(elements.size()); }
    i64 index_of(i64 element) const;
    bool leq(i64 a, i64 b) const { return le[a][b]; }  // by index
    bool is_antichain(const std::vector<int>& idx) const;
};

struct GKProfile {
    std::vector<i64> widths;  // l_1 >= l_2 >= ...

    friend bool operator==(const GKProfile&, const GKProfile&) = default;
};

ShiPoset shi_poset(const Window& w);

// Size of the longest antichain; throws EmptyPoset on an empty poset.
i64 width(const ShiPoset& p);

// l_1 + ... + l_k = maximal size of a union of k antichains (equivalently, of
// a subset with no chain longer than k).
GKProfile greene_kleitman(const ShiPoset& p);

// All antichains of maximal size, each as a sorted list of elements.
std::vector<std::vector<i64>> longest_antichains(const ShiPoset& p);

}  // namespace ambc
