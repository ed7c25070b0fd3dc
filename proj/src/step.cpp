#include "ambc/step.hpp"

#include <algorithm>

#include "ambc/finite_mbc.hpp"

namespace ambc {

AffineStepResult affine_forward_step(const Window& w, const Numbering& d, bool materialize_cells) {
    if (w.is_empty()) throw std::invalid_argument("forward step on an empty permutation");
    const i64 m = d.period;
    if (m <= 0) throw std::invalid_argument("numbering must have positive period");

    std::vector<Cell> reps = w.balls();
    // Any m consecutive levels pick up each translate class exactly once.
    i64 base = d.eval(reps.front());

    AffineStepResult out{Window::empty(w.n()), {}, {}};
    std::vector<Cell> next_balls;
    for (i64 level = base; level < base + m; ++level) {
        ZigZagLevel zl;
        zl.level = level;
        for (const Cell& b : reps) {
            i64 diff = level - d.eval(b);
            if (diff % m != 0) continue;
            zl.balls.push_back(b.translated(diff / m, w.n()));
        }
        if (zl.balls.empty()) throw std::logic_error("proper numbering level with no balls");
        // Inner corner-posts south to north; level sets of a proper numbering
        // are strict NE chains.
        std::sort(zl.balls.begin(), zl.balls.end(),
                  [](const Cell& a, const Cell& b) { return a.row > b.row; });
        for (size_t t = 0; t + 1 < zl.balls.size(); ++t) {
            if (!strictly_ne(zl.balls[t + 1], zl.balls[t]))
                throw std::logic_error("numbering level is not an NE chain");
            zl.outer.push_back({zl.balls[t].row, zl.balls[t + 1].col});
        }
        zl.back = {zl.balls.back().row, zl.balls.front().col};
        if (materialize_cells) zl.zigzag_cells = zigzag_through_inner(zl.balls).cells;
        for (const Cell& c : zl.outer) next_balls.push_back(c);
        out.back_posts.push_back(zl.back);
        out.levels.push_back(std::move(zl));
    }
    std::sort(out.back_posts.begin(), out.back_posts.end());
    out.next = window_from_balls(w.n(), next_balls);
    return out;
}

}  // namespace ambc
