#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ambc/core.hpp"

namespace ambc {

// Partial non-affine permutation: a finite sequence over {integer, EMPTY} with
// all integers distinct. Entry t (1-based) is a ball at (t, entries[t-1]).
struct Pnap {
    std::vector<std::optional<i64>> entries;

    explicit Pnap(std::vector<std::optional<i64>> e = {});
    static Pnap from_values(const std::vector<i64>& values);

    bool empty_of_balls() const;
    std::vector<Cell> balls() const;

    friend bool operator==(const Pnap&, const Pnap&) = default;
};

// Rows strictly increasing, row lengths weakly decreasing, columns strictly
// increasing; entries are arbitrary distinct integers.
struct StandardTableau {
    std::vector<std::vector<i64>> rows;

    bool valid() const;
    std::vector<i64> shape() const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

// A reverse zig-zag: consecutive cells adjacent, each step directly north or
// directly east; first step east and last step north when it has >= 2 cells.
struct ZigZag {
    std::vector<Cell> cells;

    bool valid() const;
};

struct CornerPosts {
    Cell back;
    std::vector<Cell> inner;
    std::vector<Cell> outer;
};

CornerPosts zigzag_corner_posts(const ZigZag& z);

// The unique reverse zig-zag whose inner corner-posts are the given cells,
// which must be pairwise strictly NE-comparable.
ZigZag zigzag_through_inner(std::vector<Cell> inner);
// The unique reverse zig-zag with the given back corner-post and outer
// corner-posts; with no outer corner-posts it is the single cell `back`.
ZigZag zigzag_from_back_and_outer(const Cell& back, std::vector<Cell> outer);

struct MbcStep {
    Pnap next;
    std::vector<i64> p_row;  // columns of back corner-posts, sorted
    std::vector<i64> q_row;  // rows of back corner-posts, sorted
};

// One step of the Matrix-Ball Construction via the iterative NW numbering.
MbcStep mbc_step(const Pnap& p);

struct MbcResult {
    StandardTableau P;
    StandardTableau Q;
};

MbcResult mbc(const Pnap& p);

// One step of inverse MBC: zig-zags have back corner-posts at (q_i, p_i) and
// outer corner-posts at the balls numbered i by the backward numbering.
Pnap mbc_inverse_step(const Pnap& p, const std::vector<i64>& p_row, const std::vector<i64>& q_row);

Pnap mbc_inverse(const StandardTableau& P, const StandardTableau& Q);

// Schensted row insertion of v (not already present).
StandardTableau bump_insert(const StandardTableau& t, i64 v);

}  // namespace ambc
