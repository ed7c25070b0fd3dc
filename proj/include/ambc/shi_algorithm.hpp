#pragma once

#include "ambc/core.hpp"
#include "ambc/tabloid.hpp"

namespace ambc {

// One combing move on an EMPTY-forward window: move the first descent's right
// element in front of the first larger element, recycle the displaced value
// to the end of the window plus n. No-op when the defined entries increase.
Window comb(const Window& w);

// Shi's insertion algorithm: comb to increasing order, peel off the first
// l_i values as row i of the tabloid (recycling the window when the peeled
// segment would span more than one period), repeat for all Greene-Kleitman
// invariants.
Tabloid shi_p(const Window& w);

}  // namespace ambc
