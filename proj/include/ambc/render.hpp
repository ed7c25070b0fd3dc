#pragma once

#include <optional>
#include <string>

#include "ambc/core.hpp"
#include "ambc/streams.hpp"

namespace ambc {

enum class RenderNumbering { SW, NE, Backward };

struct RenderOptions {
    i64 row_lo = 1;
    i64 row_hi = 0;  // defaults to n when < row_lo
    RenderNumbering numbering = RenderNumbering::SW;
    std::optional<Stream> stream;  // required for Backward
};

// ASCII picture of the ball matrix: balls carry their numbering value,
// channel balls are bracketed, stream cells are '*', other zig-zag cells are
// '.', and period lines run every n rows and columns.
std::string render(const Window& w, const RenderOptions& opts);

}  // namespace ambc
