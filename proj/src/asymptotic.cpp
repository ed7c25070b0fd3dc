#include "ambc/asymptotic.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace ambc {

namespace {

ResidueTabloid to_residues(const StandardTableau& t, i64 n) {
    ResidueTabloid out;
    for (const auto& row : t.rows) {
        std::vector<i64> r;
        for (i64 v : row) r.push_back(residue_rep(v, n));
        std::sort(r.begin(), r.end());
        out.rows.push_back(std::move(r));
    }
    return out;
}

// Rowwise multiset difference big - small; rows absent in `small` count as
// empty. Nullopt when some row of `small` is not contained in `big`.
std::optional<ResidueTabloid> rowwise_diff(const ResidueTabloid& big, const ResidueTabloid& small) {
    if (small.rows.size() > big.rows.size()) return std::nullopt;
    ResidueTabloid out;
    for (size_t r = 0; r < big.rows.size(); ++r) {
        std::vector<i64> diff;
        if (r < small.rows.size()) {
            if (!std::includes(big.rows[r].begin(), big.rows[r].end(), small.rows[r].begin(),
                               small.rows[r].end()))
                return std::nullopt;
            std::set_difference(big.rows[r].begin(), big.rows[r].end(), small.rows[r].begin(),
                                small.rows[r].end(), std::back_inserter(diff));
        } else {
            diff = big.rows[r];
        }
        if (!diff.empty()) out.rows.push_back(std::move(diff));
    }
    return out;
}

bool distinct_residues(const ResidueTabloid& t) {
    std::set<i64> seen;
    for (const auto& row : t.rows)
        for (i64 v : row)
            if (!seen.insert(v).second) return false;
    return true;
}

}  // namespace

PrefixInsertion insert_prefix(const Window& w, i64 count) {
    if (!w.is_total()) throw std::invalid_argument("insert_prefix expects a total permutation");
    StandardTableau t;
    for (i64 i = 1; i <= count; ++i) t = bump_insert(t, *w.at(i));
    return {t, to_residues(t, w.n())};
}

Stabilization stabilized_p(const Window& w, i64 max_periods) {
    if (!w.is_total()) throw std::invalid_argument("stabilized_p expects a total permutation");
    const i64 n = w.n();
    const i64 limit = max_periods * n;

    // All residue tabloids up to limit + 4n, built incrementally.
    std::vector<ResidueTabloid> bars;
    bars.reserve(limit + 4 * n + 1);
    bars.push_back({});
    StandardTableau t;
    for (i64 i = 1; i <= limit + 4 * n; ++i) {
        t = bump_insert(t, *w.at(i));
        bars.push_back(to_residues(t, n));
    }

    for (i64 i0 = 1; i0 <= limit; ++i0) {
        auto fixed = rowwise_diff(bars[i0 + n], bars[i0]);
        if (!fixed || !distinct_residues(*fixed)) continue;
        bool stable = true;
        for (i64 i = i0 + 1; i <= i0 + 3 * n; ++i) {
            auto d = rowwise_diff(bars[i + n], bars[i]);
            if (!d || !(*d == *fixed)) {
                stable = false;
                break;
            }
        }
        if (stable) {
            Tabloid p;
            p.rows = fixed->rows;
            return {p, i0};
        }
    }
    throw NoStabilization("no stable periodic increment within the budget");
}

}  // namespace ambc
