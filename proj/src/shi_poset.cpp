#include "ambc/shi_poset.hpp"

#include <algorithm>

namespace ambc {

i64 ShiPoset::index_of(i64 element) const {
    auto it = std::find(elements.begin(), elements.end(), element);
    if (it == elements.end()) throw std::out_of_range("element not in poset");
    return it - elements.begin();
}

bool ShiPoset::is_antichain(const std::vector<int>& idx) const {
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
            if (le[idx[a]][idx[b]] || le[idx[b]][idx[a]]) return false;
    return true;
}

ShiPoset shi_poset(const Window& w) {
    ShiPoset p;
    p.n = w.n();
    p.elements = w.defined_rows();
    const i64 m = p.size();
    p.le.assign(m, std::vector<bool>(m, false));
    p.labels.resize(m);
    for (i64 a = 0; a < m; ++a) {
        p.labels[a] = residue_rep(*w.at(p.elements[a]), p.n);
        p.le[a][a] = true;
    }
    for (i64 a = 0; a < m; ++a) {
        for (i64 b = 0; b < m; ++b) {
            if (a == b) continue;
            i64 i = p.elements[a], j = p.elements[b];
            i64 wi = *w.at(i), wj = *w.at(j);
            if ((i > j && wi < wj) || wj > wi + p.n) p.le[a][b] = true;
        }
    }
    // Transitive closure; defensive, the raw relation is already transitive.
    for (i64 k = 0; k < m; ++k)
        for (i64 a = 0; a < m; ++a)
            for (i64 b = 0; b < m; ++b)
                if (p.le[a][k] && p.le[k][b]) p.le[a][b] = true;
    return p;
}

namespace {

// Longest chain inside the subset encoded by mask.
i64 longest_chain_in(const ShiPoset& p, unsigned mask) {
    const i64 m = p.size();
    std::vector<i64> best(m, 0);
    // elements sorted so comparisons only look backward: order by number of
    // elements below.
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = 0, cb = 0;
        for (int k = 0; k < m; ++k) {
            if (p.le[k][a]) ++ca;
            if (p.le[k][b]) ++cb;
        }
        return ca < cb;
    });
    i64 result = 0;
    for (int oi = 0; oi < m; ++oi) {
        int a = order[oi];
        if (!((mask >> a) & 1)) continue;
        best[a] = 1;
        for (int oj = 0; oj < oi; ++oj) {
            int b = order[oj];
            if (!((mask >> b) & 1)) continue;
            if (b != a && p.le[b][a]) best[a] = std::max(best[a], best[b] + 1);
        }
        result = std::max(result, best[a]);
    }
    return result;
}

}  // namespace

i64 width(const ShiPoset& p) {
    if (p.size() == 0) throw EmptyPoset("width of an empty poset");
    const i64 m = p.size();
    if (m > 24) throw std::length_error("poset too large for exhaustive width");
    i64 best = 0;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> idx;
        for (int a = 0; a < m; ++a)
            if ((mask >> a) & 1) idx.push_back(a);
        if (static_cast<i64>(idx.size()) <= best) continue;
        if (p.is_antichain(idx)) best = idx.size();
    }
    return best;
}

GKProfile greene_kleitman(const ShiPoset& p) {
    GKProfile out;
    const i64 m = p.size();
    if (m == 0) return out;
    if (m > 20) throw std::length_error("poset too large for exhaustive Greene-Kleitman");
    // a_k = max |S| over subsets S whose longest chain has length <= k.
    std::vector<i64> a(m + 1, 0);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        i64 chain = longest_chain_in(p, mask);
        i64 size = __builtin_popcount(mask);
        for (i64 k = chain; k <= m; ++k) a[k] = std::max(a[k], size);
    }
    for (i64 k = 1; k <= m && a[k - 1] < m; ++k) out.widths.push_back(a[k] - a[k - 1]);
    return out;
}

std::vector<std::vector<i64>> longest_antichains(const ShiPoset& p) {
    const i64 m = p.size();
    i64 wd = width(p);
    std::vector<std::vector<i64>> out;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != wd) continue;
        std::vector<int> idx;
        for (int a = 0; a < m; ++a)
            if ((mask >> a) & 1) idx.push_back(a);
        if (!p.is_antichain(idx)) continue;
        std::vector<i64> elems;
        for (int a : idx) elems.push_back(p.elements[a]);
        out.push_back(std::move(elems));
    }
    return out;
}

}  // namespace ambc
