#pragma once

#include <vector>

#include "ambc/core.hpp"
#include "ambc/numbering.hpp"

namespace ambc {

// One zig-zag of an affine step: the balls numbered `level`, the back
// corner-post, and the outer corner-posts. Cells of the staircase itself are
// only materialized on request (for rendering); the corner posts have closed
// forms and the staircase can span arbitrarily many columns.
struct ZigZagLevel {
    i64 level = 0;
    std::vector<Cell> balls;
    Cell back;
    std::vector<Cell> outer;
    std::vector<Cell> zigzag_cells;  // empty unless requested
};

struct AffineStepResult {
    Window next;
    std::vector<Cell> back_posts;       // one period of the recorded stream, SE order
    std::vector<ZigZagLevel> levels;    // one period of zig-zags
};

// The zig-zag step common to the forward map: group balls by a proper
// numbering, connect each level by the unique zig-zag with those inner
// corner-posts, return outer corner-posts and back corner-posts.
AffineStepResult affine_forward_step(const Window& w, const Numbering& d,
                                     bool materialize_cells = false);

}  // namespace ambc
