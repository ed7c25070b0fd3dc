#include "ambc/backward.hpp"

#include <algorithm>
#include <limits>

#include "ambc/finite_mbc.hpp"

namespace ambc {

Numbering stream_numbering(const Window& w, const Stream& s, i64 f_shift) {
    if (!is_compatible(w, s)) throw Incompatible("stream is not compatible with the permutation");
    const i64 n = w.n();
    const i64 k = s.flow();
    Numbering d;
    d.n = n;
    d.period = k;
    for (const Cell& b : w.balls()) {
        i64 best = std::numeric_limits<i64>::min();
        for (i64 t = 0; t < k; ++t) {
            Cell c = s.cell(t);
            i64 q = std::min(floor_div(b.row - c.row, n), floor_div(b.col - c.col, n));
            best = std::max(best, s.value_of(t, f_shift) + q * k);
        }
        d.values[b.row] = best;
    }
    return d;
}

Numbering backward_numbering(const Window& w, const Stream& s, i64 f_shift,
                             const std::function<size_t(const std::vector<Cell>&)>& pick) {
    Numbering d = stream_numbering(w, s, f_shift);
    const i64 n = w.n();
    const i64 k = s.flow();
    std::vector<Cell> reps = w.balls();
    const size_t cls = reps.size();

    // Whether some translate of reps[y] with the same value as reps[x] lies
    // strictly SE (dir=+1) or strictly NW (dir=-1) of reps[x].
    auto equal_value_witness = [&](size_t x, int dir) {
        i64 vx = d.values.at(reps[x].row);
        for (size_t y = 0; y < cls; ++y) {
            i64 diff = vx - d.values.at(reps[y].row);
            if (diff % k != 0) continue;
            i64 q = diff / k;
            if (x == y && q == 0) continue;
            Cell c = reps[y].translated(q, n);
            if (dir > 0 ? strictly_se(c, reps[x]) : strictly_nw(c, reps[x])) return true;
        }
        return false;
    };

    for (i64 iter = 0;; ++iter) {
        if (iter > 200000) throw std::logic_error("backward numbering failed to terminate");
        std::vector<Cell> candidates;
        std::vector<size_t> candidate_idx;
        for (size_t x = 0; x < cls; ++x)
            if (equal_value_witness(x, +1) && !equal_value_witness(x, -1)) {
                candidates.push_back(reps[x]);
                candidate_idx.push_back(x);
            }
        if (candidates.empty()) break;
        size_t chosen;
        if (pick) {
            chosen = pick(candidates);
            if (chosen >= candidates.size()) throw std::out_of_range("pick out of range");
        } else {
            chosen = 0;
            for (size_t i = 1; i < candidates.size(); ++i) {
                i64 vi = d.values.at(candidates[i].row);
                i64 vc = d.values.at(candidates[chosen].row);
                if (vi < vc || (vi == vc && candidates[i].row < candidates[chosen].row)) chosen = i;
            }
        }
        --d.values.at(reps[candidate_idx[chosen]].row);
    }

    // Full monotonicity check over translate classes.
    for (size_t x = 0; x < cls; ++x) {
        for (size_t y = 0; y < cls; ++y) {
            i64 kk = floor_div(std::min(reps[x].row - reps[y].row - 1, reps[x].col - reps[y].col - 1), n);
            // reps[y] + kk(n,n) is the SE-most translate strictly NW of reps[x].
            if (x == y && kk >= 0) throw std::logic_error("ball strictly northwest of itself");
            if (d.values.at(reps[y].row) + kk * k >= d.values.at(reps[x].row))
                throw std::logic_error("backward numbering is not monotone");
        }
    }
    return d;
}

BackwardStepResult backward_step(const Window& w, const Stream& s, i64 f_shift,
                                 bool materialize_cells) {
    Numbering d = backward_numbering(w, s, f_shift);
    const i64 n = w.n();
    const i64 k = s.flow();
    std::vector<Cell> reps = w.balls();

    BackwardStepResult out{Window::empty(n), {}, {}};
    std::vector<Cell> inner_all;
    std::vector<std::pair<Cell, i64>> inner_levels;
    i64 base = 1 + f_shift;
    for (i64 level = base; level < base + k; ++level) {
        ZigZagLevel zl;
        zl.level = level;
        for (const Cell& b : reps) {
            i64 diff = level - d.values.at(b.row);
            if (diff % k != 0) continue;
            zl.balls.push_back(b.translated(diff / k, n));
        }
        zl.back = s.cell_numbered(level, f_shift);
        // The balls are the outer corner-posts; inner corner-posts in closed
        // form. Singleton zig-zag when the level has no balls.
        std::vector<Cell> inner;
        if (zl.balls.empty()) {
            inner.push_back(zl.back);
        } else {
            std::sort(zl.balls.begin(), zl.balls.end(),
                      [](const Cell& a, const Cell& b) { return a.row > b.row; });
            for (size_t t = 0; t + 1 < zl.balls.size(); ++t)
                if (!strictly_ne(zl.balls[t + 1], zl.balls[t]))
                    throw Incompatible("outer corner-posts must form a strict NE chain");
            if (!(zl.back.row < zl.balls.back().row && zl.back.col < zl.balls.front().col))
                throw Incompatible("back corner-post must lie strictly northwest of the outer ones");
            inner.push_back({zl.balls.front().row, zl.back.col});
            for (size_t t = 0; t + 1 < zl.balls.size(); ++t)
                inner.push_back({zl.balls[t + 1].row, zl.balls[t].col});
            inner.push_back({zl.back.row, zl.balls.back().col});
        }
        zl.outer = zl.balls;
        if (materialize_cells)
            zl.zigzag_cells = zigzag_from_back_and_outer(zl.back, zl.balls).cells;
        for (const Cell& c : inner) {
            inner_all.push_back(c);
            inner_levels.emplace_back(c, level);
        }
        out.levels.push_back(std::move(zl));
    }
    out.next = window_from_balls(n, inner_all);
    out.induced.n = n;
    out.induced.period = k;
    for (const auto& [c, level] : inner_levels) {
        i64 rep = residue_rep(c.row, n);
        out.induced.values[rep] = level - ((c.row - rep) / n) * k;
    }
    return out;
}

Window psi(const OmegaTriple& t) {
    t.validate();
    Window w = Window::empty(t.n);
    for (i64 i = static_cast<i64>(t.P.rows.size()) - 1; i >= 0; --i) {
        Stream s(t.n, t.Q.rows[i], t.P.rows[i], t.rho[i]);
        if (!is_compatible(w, s)) throw InvalidTriple("row stream incompatible with partial result");
        w = backward_step(w, s).next;
    }
    return w;
}

}  // namespace ambc
