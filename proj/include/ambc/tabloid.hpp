#pragma once

#include <string>
#include <vector>

#include "ambc/core.hpp"

namespace ambc {

// Rows of disjoint residue classes over [1, n], shape weakly decreasing.
// Canonical form keeps each row sorted increasingly.
struct Tabloid {
    std::vector<std::vector<i64>> rows;

    std::vector<i64> shape() const;
    i64 size() const;
    void canonicalize();

    friend bool operator==(const Tabloid&, const Tabloid&) = default;
};

using Weight = std::vector<i64>;

struct OmegaTriple {
    i64 n = 0;
    Tabloid P;
    Tabloid Q;
    Weight rho;

    // Shape/residue invariants of an Omega element (total size <= n so that
    // images of partial permutations qualify). Throws InvalidTriple.
    void validate() const;

    friend bool operator==(const OmegaTriple&, const OmegaTriple&) = default;
};

// True when replacing residues by representatives and sorting rows yields a
// standard Young tableau.
bool standardizable(const Tabloid& t, i64 n);

// Text form "1,2,5|4,6,7|3 ; 3,6,7|2,4,5|1 ; 3,3,1".
std::string to_text(const OmegaTriple& t);
OmegaTriple triple_from_text(const std::string& text, i64 n);

// JSON form {"P": [[...]], "Q": [[...]], "rho": [...]}.
std::string triple_to_json(const OmegaTriple& t);
OmegaTriple triple_from_json(const std::string& json_text, i64 n);

}  // namespace ambc
