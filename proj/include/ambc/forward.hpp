#pragma once

#include <vector>

#include "ambc/channels.hpp"
#include "ambc/core.hpp"
#include "ambc/step.hpp"
#include "ambc/streams.hpp"
#include "ambc/tabloid.hpp"

namespace ambc {

enum class NumberingPolicy { SW, NE };

struct ForwardStep {
    Window next;
    Stream stream;
    std::vector<ZigZagLevel> levels;
};

// One step of AMBC with the given proper numbering: next carries the outer
// corner-posts, stream the back corner-posts.
ForwardStep forward_step(const Window& w, const Numbering& d);

// The forward map: iterate forward_step with the southwest channel numbering,
// recording the defining data (A, B, r) of each stream as (Q row, P row, rho).
OmegaTriple phi(const Window& w);

// Same map with a chosen extremal channel-numbering policy; (P, Q) never
// depend on the choice, rho may.
OmegaTriple phi_with_numbering_policy(const Window& w, NumberingPolicy policy);

}  // namespace ambc
