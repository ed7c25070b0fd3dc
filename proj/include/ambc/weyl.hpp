#pragma once

#include "ambc/streams.hpp"
#include "ambc/tabloid.hpp"

namespace ambc {

// rho is dominant when, for each i with equal consecutive row lengths,
// rho_{i+1} - r_{i+1} >= rho_i.
bool is_dominant(const OmegaTriple& t);

// Map rho into the shifted dominant chamber: subtract the symmetrized offsets,
// sort each constant-shape block increasingly, add the offsets back.
Weight dominant_representative(const OmegaTriple& t);

// Whether rho1 and rho2 lie in one orbit of the parabolic group generated by
// the adjacent transpositions at equal-shape positions (acting on rho - s).
bool fiber_equivalent(const Tabloid& P, const Tabloid& Q, const Weight& rho1, const Weight& rho2,
                      i64 n);

}  // namespace ambc
