#include "ambc/shi_algorithm.hpp"

#include <algorithm>

#include "ambc/shi_poset.hpp"

namespace ambc {

namespace {

// Index of the first defined entry; entries before it must all be EMPTY.
i64 defined_start(const Window& w) {
    const auto& e = w.entries();
    i64 start = 0;
    while (start < w.n() && !e[start]) ++start;
    for (i64 i = start; i < w.n(); ++i)
        if (!e[i]) throw NotEmptyForward("EMPTY entries must all be at the window start");
    return start;
}

}  // namespace

Window comb(const Window& w) {
    const i64 n = w.n();
    const i64 start = defined_start(w);
    std::vector<std::optional<i64>> e = w.entries();

    i64 i = -1;
    for (i64 t = start + 1; t < n; ++t)
        if (*e[t - 1] > *e[t]) {
            i = t;
            break;
        }
    if (i == -1) return w;

    i64 j = -1;
    for (i64 t = start; t < i; ++t)
        if (*e[t] > *e[i]) {
            j = t;
            break;
        }
    // j exists: e[i-1] > e[i] qualifies.
    i64 displaced = *e[j];
    e[j] = *e[i];
    for (i64 t = i; t + 1 < n; ++t) e[t] = e[t + 1];
    e[n - 1] = displaced + n;
    return Window(n, std::move(e));
}

Tabloid shi_p(const Window& w) {
    const i64 n = w.n();
    if (!w.is_total()) throw std::invalid_argument("shi_p expects a total permutation");
    GKProfile gk = greene_kleitman(shi_poset(w));

    Tabloid out;
    Window cur = w;
    i64 moves = 0;
    const i64 cap = 50 * n * n;
    for (i64 li : gk.widths) {
        while (true) {
            if (++moves > cap) throw std::logic_error("Shi loop exceeded its move cap");
            // (C) comb until the defined entries increase.
            Window next = comb(cur);
            if (!(next == cur)) {
                cur = next;
                continue;
            }
            const auto& e = cur.entries();
            i64 start = defined_start(cur);
            if (start + li > n) throw std::logic_error("fewer defined entries than the G-K row length");
            if (*e[start + li - 1] < *e[start] + n) {
                std::vector<i64> row;
                std::vector<std::optional<i64>> stripped = e;
                for (i64 t = start; t < start + li; ++t) {
                    row.push_back(residue_rep(*e[t], n));
                    stripped[t] = std::nullopt;
                }
                std::sort(row.begin(), row.end());
                out.rows.push_back(std::move(row));
                cur = Window(n, std::move(stripped));
                break;
            }
            // Recycle the first defined value to the end of the window.
            std::vector<std::optional<i64>> recycled(n);
            for (i64 t = start; t + 1 < n; ++t) recycled[t] = e[t + 1];
            recycled[n - 1] = *e[start] + n;
            cur = Window(n, std::move(recycled));
        }
    }
    return out;
}

}  // namespace ambc
