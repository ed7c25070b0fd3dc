#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ambc/core.hpp"
#include "ambc/numbering.hpp"
#include "ambc/step.hpp"
#include "ambc/streams.hpp"
#include "ambc/tabloid.hpp"

namespace ambc {

// Initial numbering d_0(b) = max f(c) over stream cells c weakly northwest
// of b, where f is the stream's proper numbering shifted by f_shift.
Numbering stream_numbering(const Window& w, const Stream& s, i64 f_shift = 0);

// The backward numbering: the fixed point of the decrement procedure applied
// to d_0; equivalently the largest monotone numbering d with S^(d(b))
// northwest of b. `pick` optionally overrides the choice of the ball to
// decrement among the eligible ones (used to exercise confluence).
Numbering backward_numbering(const Window& w, const Stream& s, i64 f_shift = 0,
                             const std::function<size_t(const std::vector<Cell>&)>& pick = {});

struct BackwardStepResult {
    Window next;
    Numbering induced;                // level of each new ball class
    std::vector<ZigZagLevel> levels;  // one period of zig-zags
};

// One step of the backward algorithm: zig-zag Z_i has back corner-post S^(i)
// and outer corner-posts at the balls numbered i; the result consists of the
// inner corner-posts. Staircase cells are materialized only on request.
BackwardStepResult backward_step(const Window& w, const Stream& s, i64 f_shift = 0,
                                 bool materialize_cells = false);

// The full backward map applied to a triple; rows are consumed last to first,
// row i contributing the stream st_{rho_i}(Q_i, P_i).
Window psi(const OmegaTriple& t);

}  // namespace ambc
