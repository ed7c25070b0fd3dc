#include "ambc/weyl.hpp"

#include <algorithm>

namespace ambc {

bool is_dominant(const OmegaTriple& t) {
    t.validate();
    auto shape = t.P.shape();
    OffsetConstants off = offset_constants(t.P, t.Q, t.n);
    for (size_t i = 0; i + 1 < shape.size(); ++i) {
        if (shape[i] > shape[i + 1]) continue;
        if (t.rho[i + 1] - off.r[i + 1] < t.rho[i]) return false;
    }
    return true;
}

namespace {

std::vector<std::pair<size_t, size_t>> shape_blocks(const std::vector<i64>& shape) {
    std::vector<std::pair<size_t, size_t>> blocks;  // [first, last] inclusive
    size_t i = 0;
    while (i < shape.size()) {
        size_t j = i;
        while (j + 1 < shape.size() && shape[j + 1] == shape[i]) ++j;
        blocks.emplace_back(i, j);
        i = j + 1;
    }
    return blocks;
}

}  // namespace

Weight dominant_representative(const OmegaTriple& t) {
    t.validate();
    auto shape = t.P.shape();
    OffsetConstants off = offset_constants(t.P, t.Q, t.n);
    Weight x(t.rho.size());
    for (size_t i = 0; i < x.size(); ++i) x[i] = t.rho[i] - off.s[i];
    for (auto [lo, hi] : shape_blocks(shape)) std::sort(x.begin() + lo, x.begin() + hi + 1);
    for (size_t i = 0; i < x.size(); ++i) x[i] += off.s[i];
    return x;
}

bool fiber_equivalent(const Tabloid& P, const Tabloid& Q, const Weight& rho1, const Weight& rho2,
                      i64 n) {
    if (P.shape() != Q.shape()) throw ShapeMismatch("tabloids must have equal shapes");
    auto shape = P.shape();
    if (rho1.size() != shape.size() || rho2.size() != shape.size())
        throw ShapeMismatch("weight length differs from number of rows");
    OffsetConstants off = offset_constants(P, Q, n);
    // Orbit membership under a product of symmetric groups is blockwise
    // multiset equality of rho - s.
    for (auto [lo, hi] : shape_blocks(shape)) {
        std::vector<i64> a, b;
        for (size_t i = lo; i <= hi; ++i) {
            a.push_back(rho1[i] - off.s[i]);
            b.push_back(rho2[i] - off.s[i]);
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

}  // namespace ambc
