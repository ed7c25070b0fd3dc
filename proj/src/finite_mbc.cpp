#include "ambc/finite_mbc.hpp"

#include <algorithm>
#include <map>

namespace ambc {

Pnap::Pnap(std::vector<std::optional<i64>> e) : entries(std::move(e)) {
    std::set<i64> seen;
    for (const auto& v : entries)
        if (v && !seen.insert(*v).second) throw NotInjective("duplicate value in PNAP");
}

Pnap Pnap::from_values(const std::vector<i64>& values) {
    std::vector<std::optional<i64>> e(values.begin(), values.end());
    return Pnap(std::move(e));
}

bool Pnap::empty_of_balls() const {
    return std::none_of(entries.begin(), entries.end(), [](const auto& v) { return v.has_value(); });
}

std::vector<Cell> Pnap::balls() const {
    std::vector<Cell> out;
    for (size_t t = 0; t < entries.size(); ++t)
        if (entries[t]) out.push_back({static_cast<i64>(t + 1), *entries[t]});
    return out;
}

bool StandardTableau::valid() const {
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (!std::is_sorted(rows[r].begin(), rows[r].end()) ||
            std::adjacent_find(rows[r].begin(), rows[r].end()) != rows[r].end())
            return false;
        if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
        if (r > 0)
            for (size_t c = 0; c < rows[r].size(); ++c)
                if (rows[r][c] <= rows[r - 1][c]) return false;
    }
    return true;
}

std::vector<i64> StandardTableau::shape() const {
    std::vector<i64> s;
    for (const auto& r : rows) s.push_back(static_cast<i64>(r.size()));
    return s;
}

bool ZigZag::valid() const {
    if (cells.empty()) return false;
    const size_t k = cells.size();
    for (size_t i = 0; i + 1 < k; ++i) {
        const Cell& a = cells[i];
        const Cell& b = cells[i + 1];
        bool north = b.row == a.row - 1 && b.col == a.col;
        bool east = b.row == a.row && b.col == a.col + 1;
        if (!north && !east) return false;
    }
    if (k >= 2) {
        if (!(cells[1].row == cells[0].row && cells[1].col == cells[0].col + 1)) return false;
        if (!(cells[k - 1].col == cells[k - 2].col && cells[k - 1].row == cells[k - 2].row - 1))
            return false;
    }
    return true;
}

CornerPosts zigzag_corner_posts(const ZigZag& z) {
    if (!z.valid()) throw std::invalid_argument("not a zig-zag");
    CornerPosts out;
    out.back = {z.cells.back().row, z.cells.front().col};
    for (const Cell& c : z.cells) {
        bool blocked_nw = false, blocked_se = false;
        for (const Cell& d : z.cells) {
            if (d == c) continue;
            if (d.col == c.col && d.row < c.row) blocked_nw = true;  // directly north
            if (d.row == c.row && d.col < c.col) blocked_nw = true;  // directly west
            if (d.col == c.col && d.row > c.row) blocked_se = true;  // directly south
            if (d.row == c.row && d.col > c.col) blocked_se = true;  // directly east
        }
        if (!blocked_nw) out.inner.push_back(c);
        if (z.cells.size() >= 2 && !blocked_se) out.outer.push_back(c);
    }
    return out;
}

ZigZag zigzag_through_inner(std::vector<Cell> inner) {
    if (inner.empty()) throw std::invalid_argument("need at least one inner corner-post");
    std::sort(inner.begin(), inner.end(), [](const Cell& a, const Cell& b) { return a.row > b.row; });
    for (size_t t = 0; t + 1 < inner.size(); ++t)
        if (!strictly_ne(inner[t + 1], inner[t]))
            throw std::invalid_argument("inner corner-posts must form a strict NE chain");

    ZigZag z;
    z.cells.push_back(inner[0]);
    for (size_t t = 0; t + 1 < inner.size(); ++t) {
        const Cell& cur = inner[t];
        const Cell& nxt = inner[t + 1];
        for (i64 c = cur.col + 1; c <= nxt.col; ++c) z.cells.push_back({cur.row, c});
        for (i64 r = cur.row - 1; r >= nxt.row; --r) z.cells.push_back({r, nxt.col});
    }
    return z;
}

ZigZag zigzag_from_back_and_outer(const Cell& back, std::vector<Cell> outer) {
    if (outer.empty()) return ZigZag{{back}};
    std::sort(outer.begin(), outer.end(), [](const Cell& a, const Cell& b) { return a.row > b.row; });
    for (size_t t = 0; t + 1 < outer.size(); ++t)
        if (!strictly_ne(outer[t + 1], outer[t]))
            throw Incompatible("outer corner-posts must form a strict NE chain");
    if (!(back.row < outer.back().row && back.col < outer.front().col))
        throw Incompatible("back corner-post must lie strictly northwest of the outer ones");

    ZigZag z;
    z.cells.push_back({outer[0].row, back.col});
    for (size_t t = 0; t < outer.size(); ++t) {
        const Cell& cur = outer[t];
        for (i64 c = z.cells.back().col + 1; c <= cur.col; ++c) z.cells.push_back({cur.row, c});
        i64 stop_row = (t + 1 < outer.size()) ? outer[t + 1].row : back.row;
        for (i64 r = cur.row - 1; r >= stop_row; --r) z.cells.push_back({r, cur.col});
    }
    return z;
}

MbcStep mbc_step(const Pnap& p) {
    std::vector<Cell> balls = p.balls();
    if (balls.empty()) throw std::invalid_argument("mbc_step on an empty PNAP");

    // Iterative NW numbering: d(b) = 1 + max d over balls strictly northwest.
    std::sort(balls.begin(), balls.end());
    std::map<Cell, i64> d;
    i64 levels = 0;
    for (const Cell& b : balls) {
        i64 best = 0;
        for (const Cell& a : balls) {
            if (a == b) break;  // sorted by (row, col); NW predecessors come first
            if (strictly_nw(a, b)) best = std::max(best, d[a]);
        }
        d[b] = best + 1;
        levels = std::max(levels, best + 1);
    }

    MbcStep out;
    std::vector<std::optional<i64>> next_entries(p.entries.size());
    for (i64 i = 1; i <= levels; ++i) {
        std::vector<Cell> level;
        for (const auto& [b, v] : d)
            if (v == i) level.push_back(b);
        ZigZag z = zigzag_through_inner(level);
        CornerPosts cp = zigzag_corner_posts(z);
        out.p_row.push_back(cp.back.col);
        out.q_row.push_back(cp.back.row);
        for (const Cell& c : cp.outer) next_entries[c.row - 1] = c.col;
    }
    std::sort(out.p_row.begin(), out.p_row.end());
    std::sort(out.q_row.begin(), out.q_row.end());
    out.next = Pnap(std::move(next_entries));
    return out;
}

MbcResult mbc(const Pnap& p) {
    MbcResult out;
    Pnap cur = p;
    while (!cur.empty_of_balls()) {
        MbcStep step = mbc_step(cur);
        out.P.rows.push_back(step.p_row);
        out.Q.rows.push_back(step.q_row);
        cur = step.next;
    }
    return out;
}

Pnap mbc_inverse_step(const Pnap& p, const std::vector<i64>& p_row, const std::vector<i64>& q_row) {
    if (p_row.size() != q_row.size()) throw ShapeMismatch("p_row and q_row differ in length");
    const i64 k = static_cast<i64>(p_row.size());
    std::vector<Cell> posts;  // posts[i-1] = (q_i, p_i)
    for (i64 i = 0; i < k; ++i) posts.push_back({q_row[i], p_row[i]});

    std::vector<Cell> balls = p.balls();
    for (const Cell& b : balls)
        for (const Cell& c : posts)
            if (b.row == c.row || b.col == c.col)
                throw Incompatible("corner-post shares a row or column with a ball");

    // Number b by the largest i with (q_i, p_i) northwest of b and all balls
    // southeast of b numbered strictly above i; process southeast-most first.
    std::sort(balls.begin(), balls.end(),
              [](const Cell& a, const Cell& b) { return a.row + a.col > b.row + b.col || (a.row + a.col == b.row + b.col && a < b); });
    std::map<Cell, i64> d;
    for (const Cell& b : balls) {
        i64 chosen = 0;
        for (i64 i = k; i >= 1; --i) {
            if (!strictly_nw(posts[i - 1], b)) continue;
            bool ok = true;
            for (const auto& [z, v] : d)
                if (strictly_se(z, b) && v <= i) ok = false;
            if (ok) {
                chosen = i;
                break;
            }
        }
        if (chosen == 0) throw Incompatible("no valid number for a ball");
        d[b] = chosen;
    }

    std::vector<Cell> inner_all;
    for (i64 i = 1; i <= k; ++i) {
        std::vector<Cell> outer;
        for (const auto& [b, v] : d)
            if (v == i) outer.push_back(b);
        ZigZag z = zigzag_from_back_and_outer(posts[i - 1], outer);
        CornerPosts cp = zigzag_corner_posts(z);
        for (const Cell& c : cp.inner) inner_all.push_back(c);
    }

    i64 max_row = static_cast<i64>(p.entries.size());
    for (const Cell& c : inner_all) max_row = std::max(max_row, c.row);
    std::vector<std::optional<i64>> entries(max_row);
    for (const Cell& c : inner_all) {
        if (c.row < 1) throw Incompatible("inner corner-post above row 1");
        entries[c.row - 1] = c.col;
    }
    return Pnap(std::move(entries));
}

Pnap mbc_inverse(const StandardTableau& P, const StandardTableau& Q) {
    if (P.shape() != Q.shape()) throw ShapeMismatch("tableaux must have equal shapes");
    Pnap w;
    for (i64 r = static_cast<i64>(P.rows.size()) - 1; r >= 0; --r)
        w = mbc_inverse_step(w, P.rows[r], Q.rows[r]);
    return w;
}

StandardTableau bump_insert(const StandardTableau& t, i64 v) {
    StandardTableau out = t;
    i64 cur = v;
    for (size_t r = 0;; ++r) {
        if (r == out.rows.size()) {
            out.rows.push_back({cur});
            return out;
        }
        auto& row = out.rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.end()) {
            row.push_back(cur);
            return out;
        }
        std::swap(cur, *it);
    }
}

}  // namespace ambc
