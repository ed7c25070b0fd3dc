#include "ambc/channels.hpp"

#include <algorithm>
#include <limits>

#include "ambc/shi_poset.hpp"
#include "ambc/step.hpp"

namespace ambc {

std::vector<i64> Channel::row_residues() const {
    std::vector<i64> out;
    for (const Cell& c : generator) out.push_back(residue_rep(c.row, n));
    std::sort(out.begin(), out.end());
    return out;
}

bool Channel::contains_class_of_row(i64 row) const {
    i64 rep = residue_rep(row, n);
    for (const Cell& c : generator)
        if (c.row == rep) return true;
    return false;
}

Cell Channel::cell(i64 t) const {
    i64 m = density();
    i64 q = floor_div(t, m);
    return generator[t - q * m].translated(q, n);
}

std::vector<Channel> all_channels(const Window& w) {
    if (w.is_empty()) throw std::invalid_argument("channels of an empty permutation");
    ShiPoset p = shi_poset(w);
    std::vector<Channel> out;
    for (const auto& antichain : longest_antichains(p)) {
        Channel c;
        c.n = w.n();
        for (i64 row : antichain) c.generator.push_back({row, *w.at(row)});
        std::sort(c.generator.begin(), c.generator.end());
        for (size_t t = 0; t + 1 < c.generator.size(); ++t)
            if (!(c.generator[t].col < c.generator[t + 1].col))
                throw std::logic_error("antichain preimage is not an SE chain");
        out.push_back(std::move(c));
    }
    return out;
}

bool sw_leq(const Channel& c1, const Channel& c2) {
    const i64 n = c1.n;
    for (const Cell& b : c1.generator) {
        bool found = false;
        for (const Cell& c : c2.generator) {
            // need k with c + k(n,n) weakly NE of b: row <= b.row, col >= b.col
            i64 khi = floor_div(b.row - c.row, n);
            i64 klo = ceil_div(b.col - c.col, n);
            if (klo <= khi) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

Channel southwest_channel(const Window& w) {
    auto channels = all_channels(w);
    for (const Channel& c : channels) {
        bool least = true;
        for (const Channel& other : channels)
            if (!sw_leq(c, other)) least = false;
        if (least) return c;
    }
    throw std::logic_error("no southwest channel found");
}

Channel northeast_channel(const Window& w) {
    auto channels = all_channels(w);
    for (const Channel& c : channels) {
        bool greatest = true;
        for (const Channel& other : channels)
            if (!sw_leq(other, c)) greatest = false;
        if (greatest) return c;
    }
    throw std::logic_error("no northeast channel found");
}

Numbering channel_numbering(const Window& w, const Channel& c,
                            std::optional<std::pair<Cell, i64>> anchor) {
    const i64 n = w.n();
    const i64 m = c.density();
    std::vector<Cell> reps = w.balls();
    const i64 cls = static_cast<i64>(reps.size());

    // Values along the channel: generator[t] gets t+1, shifted by the anchor.
    i64 shift = 0;
    if (anchor) {
        const auto& [ball, value] = *anchor;
        i64 rep = residue_rep(ball.row, n);
        bool found = false;
        for (i64 t = 0; t < m; ++t) {
            if (c.generator[t].row == rep) {
                i64 k = (ball.row - rep) / n;
                shift = value - (t + 1 + k * m);
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("anchor ball is not on the channel");
    }

    constexpr i64 kUnset = std::numeric_limits<i64>::min();
    std::vector<i64> value(cls, kUnset);
    std::vector<i64> base(cls, kUnset);
    for (i64 t = 0; t < m; ++t) {
        i64 idx = std::find_if(reps.begin(), reps.end(),
                               [&](const Cell& b) { return b.row == c.generator[t].row; }) -
                  reps.begin();
        base[idx] = t + 1 + shift;
        value[idx] = base[idx];
    }

    // Largest k with reps[y] + k(n,n) strictly northwest of reps[x]; only that
    // translate matters for the longest-path relaxation.
    auto kmax = [&](i64 x, i64 y) {
        i64 dr = reps[x].row - reps[y].row - 1;
        i64 dc = reps[x].col - reps[y].col - 1;
        return floor_div(std::min(dr, dc), n);
    };

    // Bellman-Ford style relaxation; the theory rules out positive cycles
    // relative to the channel values, so cls+1 rounds suffice.
    for (i64 round = 0; round <= cls + 1; ++round) {
        bool changed = false;
        for (i64 x = 0; x < cls; ++x) {
            i64 best = base[x];
            for (i64 y = 0; y < cls; ++y) {
                if (value[y] == kUnset) continue;
                i64 cand = value[y] + kmax(x, y) * m + 1;
                best = std::max(best, cand);
            }
            if (best != kUnset && best != value[x]) {
                value[x] = best;
                changed = true;
            }
        }
        if (!changed) break;
        if (round == cls + 1) throw std::logic_error("channel numbering failed to stabilize");
    }

    for (i64 x = 0; x < cls; ++x) {
        if (value[x] == kUnset) throw std::logic_error("unreachable ball class in channel numbering");
        if (base[x] != kUnset && value[x] != base[x])
            throw std::logic_error("channel numbering exceeded its base on the channel");
    }

    Numbering d;
    d.n = n;
    d.period = m;
    for (i64 x = 0; x < cls; ++x) d.values[reps[x].row] = value[x];
    return d;
}

Numbering sw_numbering(const Window& w) { return channel_numbering(w, southwest_channel(w)); }
Numbering ne_numbering(const Window& w) { return channel_numbering(w, northeast_channel(w)); }

i64 distance(const Window& w, const Channel& c1, const Channel& c2) {
    Numbering n1 = channel_numbering(w, c1);
    Numbering n2 = channel_numbering(w, c2);
    // Align n2 with n1 on c1.
    i64 delta = n1.eval(c1.generator[0]) - n2.eval(c1.generator[0]);
    for (const Cell& b : c1.generator)
        if (n1.eval(b) - n2.eval(b) != delta)
            throw std::logic_error("numbering difference is not constant on a channel");
    i64 h = (n2.eval(c2.generator[0]) + delta) - n1.eval(c2.generator[0]);
    for (const Cell& b : c2.generator)
        if ((n2.eval(b) + delta) - n1.eval(b) != h)
            throw std::logic_error("distance is not constant on the target channel");
    if (h < 0) throw std::logic_error("negative channel distance");
    return h;
}

std::vector<std::vector<Channel>> rivers(const Window& w) {
    auto channels = all_channels(w);
    const size_t count = channels.size();
    std::vector<int> river_of(count, -1);
    std::vector<std::vector<Channel>> out;
    for (size_t i = 0; i < count; ++i) {
        if (river_of[i] != -1) continue;
        int id = static_cast<int>(out.size());
        river_of[i] = id;
        out.push_back({channels[i]});
        for (size_t j = i + 1; j < count; ++j) {
            if (river_of[j] != -1) continue;
            if (distance(w, channels[i], channels[j]) == 0) {
                river_of[j] = id;
                out[id].push_back(channels[j]);
            }
        }
    }
    return out;
}

namespace {

// Largest family of pairwise disjoint longest antichains that can be totally
// ordered in the antichain order; returned as channels, SW to NE.
std::vector<Channel> ordered_disjoint_family(const Window& w) {
    auto channels = all_channels(w);
    const size_t count = channels.size();

    auto disjoint = [&](const Channel& a, const Channel& b) {
        for (const Cell& x : a.generator)
            if (b.contains_class_of_row(x.row)) return false;
        return true;
    };

    std::vector<Channel> best;
    if (count > 20) throw std::length_error("too many channels for exhaustive search");
    // count is small at desk scale; enumerate subsets.
    for (unsigned mask = 1; mask < (1u << count); ++mask) {
        std::vector<Channel> family;
        for (size_t i = 0; i < count; ++i)
            if ((mask >> i) & 1) family.push_back(channels[i]);
        if (family.size() <= best.size()) continue;
        bool ok = true;
        for (size_t a = 0; a < family.size() && ok; ++a)
            for (size_t b = a + 1; b < family.size() && ok; ++b) {
                if (!disjoint(family[a], family[b])) ok = false;
                if (ok && !sw_leq(family[a], family[b]) && !sw_leq(family[b], family[a])) ok = false;
            }
        if (!ok) continue;
        std::stable_sort(family.begin(), family.end(), [](const Channel& a, const Channel& b) {
            return sw_leq(a, b) && !sw_leq(b, a);
        });
        for (size_t a = 0; a + 1 < family.size() && ok; ++a)
            if (!sw_leq(family[a], family[a + 1])) ok = false;
        if (ok) best = family;
    }
    return best;
}

}  // namespace

InterlacingCollections interlacing_collections(const Window& w, const Numbering& numbering) {
    InterlacingCollections out;
    out.c = ordered_disjoint_family(w);
    if (out.c.size() < 2) throw NotEnoughChannels("need two disjoint maximal antichains");

    AffineStepResult step = affine_forward_step(w, numbering);
    // Level of each forward-step ball class, and the channel balls per level.
    const i64 n = w.n();
    auto level_of = [&](const Cell& ball, i64* k_out) -> const ZigZagLevel* {
        for (const ZigZagLevel& zl : step.levels) {
            for (const Cell& o : zl.outer) {
                if (residue_rep(o.row, n) == residue_rep(ball.row, n) &&
                    o.col - o.row == ball.col - ball.row) {
                    *k_out = (ball.row - o.row) / n;
                    return &zl;
                }
            }
        }
        return nullptr;
    };
    auto channel_ball_on_level = [&](const Channel& c, const ZigZagLevel& zl, i64 k) -> std::optional<Cell> {
        for (const Cell& b : zl.balls)
            if (c.contains_class_of_row(b.row)) return b.translated(k, n);
        return std::nullopt;
    };

    auto fw_channels = all_channels(step.next);
    for (size_t i = 0; i + 1 < out.c.size(); ++i) {
        const Channel& lo = out.c[i];
        const Channel& hi = out.c[i + 1];
        bool placed = false;
        for (const Channel& d : fw_channels) {
            bool between = true;
            for (const Cell& b : d.generator) {
                i64 k = 0;
                const ZigZagLevel* zl = level_of(b, &k);
                if (!zl) throw std::logic_error("forward ball not on any zig-zag");
                auto blo = channel_ball_on_level(lo, *zl, k);
                auto bhi = channel_ball_on_level(hi, *zl, k);
                if (!blo || !bhi || !weakly_ne(b, *blo) || !weakly_sw(b, *bhi)) {
                    between = false;
                    break;
                }
            }
            if (between) {
                out.d.push_back(d);
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("no interlacing channel between a consecutive pair");
    }
    return out;
}

}  // namespace ambc
