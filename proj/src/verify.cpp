#include "ambc/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "ambc/asymptotic.hpp"
#include "ambc/backward.hpp"
#include "ambc/channels.hpp"
#include "ambc/forward.hpp"
#include "ambc/shi_algorithm.hpp"
#include "ambc/shi_poset.hpp"
#include "ambc/streams.hpp"
#include "ambc/weyl.hpp"

namespace ambc {

std::vector<Window> enumerate_windows(i64 n, i64 shift_max) {
    std::vector<i64> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    const i64 span = 2 * shift_max + 1;
    std::vector<Window> out;
    do {
        i64 combos = 1;
        for (i64 i = 0; i < n; ++i) combos *= span;
        for (i64 code = 0; code < combos; ++code) {
            i64 c = code;
            std::vector<std::optional<i64>> entries(n);
            for (i64 i = 0; i < n; ++i) {
                i64 k = c % span - shift_max;
                c /= span;
                entries[i] = perm[i] + n * k;
            }
            out.emplace_back(n, std::move(entries));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

void tabloids_of_shape(const std::vector<i64>& shape, std::vector<i64> pool, size_t row,
                       Tabloid& acc, std::vector<Tabloid>& out) {
    if (row == shape.size()) {
        out.push_back(acc);
        return;
    }
    // Choose shape[row] residues from pool for this row.
    const i64 k = shape[row];
    std::vector<int> pick(pool.size(), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    std::sort(pick.begin(), pick.end(), std::greater<int>());
    do {
        std::vector<i64> row_vals, rest;
        for (size_t i = 0; i < pool.size(); ++i)
            (pick[i] ? row_vals : rest).push_back(pool[i]);
        acc.rows.push_back(row_vals);
        tabloids_of_shape(shape, rest, row + 1, acc, out);
        acc.rows.pop_back();
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

std::vector<std::vector<i64>> partitions_of(i64 n) {
    std::vector<std::vector<i64>> out;
    std::vector<i64> cur;
    auto rec = [&](auto&& self, i64 rest, i64 maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (i64 p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace

std::vector<std::pair<Tabloid, Tabloid>> enumerate_tabloid_pairs(i64 n) {
    std::vector<std::pair<Tabloid, Tabloid>> out;
    std::vector<i64> all(n);
    std::iota(all.begin(), all.end(), 1);
    for (const auto& shape : partitions_of(n)) {
        std::vector<Tabloid> tabs;
        Tabloid acc;
        tabloids_of_shape(shape, all, 0, acc, tabs);
        for (const Tabloid& p : tabs)
            for (const Tabloid& q : tabs) out.emplace_back(p, q);
    }
    return out;
}

std::vector<Weight> enumerate_weights(i64 len, i64 lo, i64 hi) {
    std::vector<Weight> out;
    Weight cur(len, lo);
    while (true) {
        out.push_back(cur);
        i64 pos = len - 1;
        while (pos >= 0 && cur[pos] == hi) cur[pos--] = lo;
        if (pos < 0) break;
        ++cur[pos];
    }
    return out;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* env = std::getenv("AMBC_SEED");
    if (!env || !*env) return fallback;
    return std::strtoull(env, nullptr, 10);
}

namespace {

struct SuiteRun {
    std::ostream& out;
    bool ok = true;

    void report(const std::string& suite, i64 n, i64 cases) {
        out << suite << " n=" << n << ": OK, " << cases << " cases\n";
    }
    void fail(const std::string& suite, i64 n, const std::string& counterexample) {
        ok = false;
        out << suite << " n=" << n << ": FAIL\n  counterexample: " << counterexample << "\n";
    }
};

bool want(const VerifyOptions& o, const std::string& name) {
    return o.suite == "all" || o.suite == name;
}

void suite_roundtrip(const VerifyOptions& o, SuiteRun& run) {
    for (i64 n = 1; n <= o.n_max; ++n) {
        i64 cases = 0;
        for (const Window& w : enumerate_windows(n, o.shift_max)) {
            ++cases;
            OmegaTriple t = phi(w);
            t.validate();
            if (!(psi(t) == w)) {
                run.fail("roundtrip", n, to_text(w) + " -> " + to_text(t) + " -> " + to_text(psi(t)));
                return;
            }
            if (!is_dominant(t)) {
                run.fail("roundtrip", n, "phi image not dominant: " + to_text(w) + " -> " + to_text(t));
                return;
            }
            OmegaTriple ne = phi_with_numbering_policy(w, NumberingPolicy::NE);
            if (!(ne.P == t.P) || !(ne.Q == t.Q)) {
                run.fail("roundtrip", n, "NE policy changed tabloids for " + to_text(w));
                return;
            }
        }
        run.report("roundtrip", n, cases);
    }
}

void suite_shi(const VerifyOptions& o, SuiteRun& run) {
    for (i64 n = 1; n <= o.n_max; ++n) {
        i64 cases = 0;
        for (const Window& w : enumerate_windows(n, o.shift_max)) {
            ++cases;
            if (!(shi_p(w) == phi(w).P)) {
                run.fail("shi", n, to_text(w));
                return;
            }
        }
        run.report("shi", n, cases);
    }
}

void suite_gravity(const VerifyOptions& o, SuiteRun& run) {
    for (i64 n = 1; n <= o.n_max; ++n) {
        i64 cases = 0;
        for (const Window& w : enumerate_windows(n, o.shift_max)) {
            ++cases;
            OmegaTriple t = phi(w);
            i64 rho_sum = std::accumulate(t.rho.begin(), t.rho.end(), i64{0});
            if (!(center_of_gravity(w) == Rational(rho_sum, 1))) {
                run.fail("gravity", n, "sum rho != center of gravity for " + to_text(w));
                return;
            }
            i64 window_sum = 0;
            for (const Cell& b : w.balls()) window_sum += b.col;
            if ((rho_sum == 0) != (window_sum == n * (n + 1) / 2)) {
                run.fail("gravity", n, "affine membership mismatch for " + to_text(w));
                return;
            }
            bool in_sn = true;
            for (const Cell& b : w.balls())
                if (b.col < 1 || b.col > n) in_sn = false;
            bool image_says = standardizable(t.P, n) && standardizable(t.Q, n) &&
                              std::all_of(t.rho.begin(), t.rho.end(), [](i64 v) { return v == 0; });
            if (in_sn != image_says) {
                run.fail("gravity", n, "S_n membership mismatch for " + to_text(w));
                return;
            }
            // Per-step decomposition G_w = G_fw + G_st.
            Window cur = w;
            while (!cur.is_empty()) {
                ForwardStep step = forward_step(cur, sw_numbering(cur));
                i64 st_diag = 0;
                for (const Cell& c : step.stream.period_cells()) st_diag += c.diagonal();
                i64 cur_diag = 0, next_diag = 0;
                for (const Cell& b : cur.balls()) cur_diag += b.diagonal();
                for (const Cell& b : step.next.balls()) next_diag += b.diagonal();
                if (cur_diag != next_diag + st_diag) {
                    run.fail("gravity", n, "per-step gravity identity fails for " + to_text(w));
                    return;
                }
                cur = step.next;
            }
        }
        run.report("gravity", n, cases);
    }
}

void suite_weyl(const VerifyOptions& o, SuiteRun& run) {
    std::mt19937_64 rng(o.seed);
    for (i64 n = 1; n <= o.n_max; ++n) {
        i64 cases = 0;
        for (const auto& [P, Q] : enumerate_tabloid_pairs(n)) {
            OffsetConstants off = offset_constants(P, Q, n);
            auto shape = P.shape();
            const i64 len = static_cast<i64>(shape.size());
            auto dominant_rep = [&](const Weight& rho) {
                Weight x(rho.size());
                for (size_t i = 0; i < rho.size(); ++i) x[i] = rho[i] - off.s[i];
                size_t i = 0;
                while (i < x.size()) {
                    size_t j = i;
                    while (j + 1 < shape.size() && shape[j + 1] == shape[i]) ++j;
                    std::sort(x.begin() + i, x.begin() + j + 1);
                    i = j + 1;
                }
                for (size_t t = 0; t < x.size(); ++t) x[t] += off.s[t];
                return x;
            };

            auto weights = enumerate_weights(len, -o.shift_max, o.shift_max);
            std::vector<Window> results;
            for (const Weight& rho : weights) {
                ++cases;
                OmegaTriple t{n, P, Q, rho};
                Window w = psi(t);
                results.push_back(w);
                OmegaTriple back = phi(w);
                OmegaTriple expect{n, P, Q, dominant_rep(rho)};
                if (!(back == expect)) {
                    run.fail("weyl", n,
                             to_text(t) + ": phi(psi) = " + to_text(back) + ", expected " + to_text(expect));
                    return;
                }
            }
            // Sampled fiber pairs: psi agrees exactly on fiber-equivalent weights.
            size_t samples = std::min<size_t>(weights.size(), 40);
            for (size_t s = 0; s < samples; ++s) {
                size_t a = rng() % weights.size();
                size_t b = rng() % weights.size();
                bool same = results[a] == results[b];
                bool orbit = fiber_equivalent(P, Q, weights[a], weights[b], n);
                if (same != orbit) {
                    OmegaTriple ta{n, P, Q, weights[a]};
                    OmegaTriple tb{n, P, Q, weights[b]};
                    run.fail("weyl", n, "fiber mismatch: " + to_text(ta) + " vs " + to_text(tb));
                    return;
                }
            }
        }
        run.report("weyl", n, cases);
    }
}

void suite_asymptotic(const VerifyOptions& o, SuiteRun& run) {
    std::mt19937_64 rng(o.seed);
    const i64 n_cap = std::clamp<i64>(o.n_max, 1, 5);
    i64 cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        i64 n = 1 + static_cast<i64>(rng() % n_cap);
        std::vector<i64> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::optional<i64>> entries(n);
        for (i64 i = 0; i < n; ++i)
            entries[i] = perm[i] + n * (static_cast<i64>(rng() % 5) - 2);
        Window w(n, std::move(entries));
        ++cases;

        OmegaTriple t = phi(w);
        Stabilization st = stabilized_p(w);
        if (!(st.p == t.P)) {
            run.fail("asymptotic", n, "stabilized P mismatch for " + to_text(w));
            return;
        }
        Stabilization stq = stabilized_p(inverse(w));
        if (!(stq.p == t.Q)) {
            run.fail("asymptotic", n, "stabilized Q mismatch for " + to_text(w));
            return;
        }
        // Rowwise rate: |count*n/i - indicator| < 1/5, checked at i0 + 10n or
        // deeper when the residual discrepancy D at i0 makes that index
        // insufficient (the deviation decays like D/i). The check index stays
        // congruent to i0 mod n; between periods the row multisets churn.
        PrefixInsertion at_start = insert_prefix(w, st.start);
        i64 disc = 0;
        for (size_t row = 0; row < t.P.rows.size(); ++row) {
            for (i64 res = 1; res <= n; ++res) {
                i64 c0 = 0;
                if (row < at_start.residues.rows.size())
                    c0 = std::count(at_start.residues.rows[row].begin(),
                                    at_start.residues.rows[row].end(), res);
                i64 ind = std::count(t.P.rows[row].begin(), t.P.rows[row].end(), res);
                disc = std::max(disc, std::abs(c0 * n - ind * st.start));
            }
        }
        i64 q = std::max<i64>(10, ceil_div(5 * disc - st.start, n) + 1);
        i64 i_chk = st.start + q * n;
        PrefixInsertion pi = insert_prefix(w, i_chk);
        for (size_t row = 0; row < t.P.rows.size(); ++row) {
            for (i64 res = 1; res <= n; ++res) {
                i64 count = 0;
                if (row < pi.residues.rows.size())
                    count = std::count(pi.residues.rows[row].begin(), pi.residues.rows[row].end(), res);
                i64 ind = std::count(t.P.rows[row].begin(), t.P.rows[row].end(), res);
                i64 dev = count * n - ind * i_chk;
                if (5 * (dev < 0 ? -dev : dev) >= i_chk) {
                    run.fail("asymptotic", n, "rate bound fails for " + to_text(w));
                    return;
                }
            }
        }
    }
    run.report("asymptotic", n_cap, cases);
}

void suite_distalt(const VerifyOptions& o, SuiteRun& run) {
    for (i64 n = 1; n <= o.n_max; ++n) {
        i64 cases = 0;
        for (const Window& w : enumerate_windows(n, o.shift_max)) {
            InterlacingCollections ic;
            try {
                ic = interlacing_collections(w, sw_numbering(w));
            } catch (const NotEnoughChannels&) {
                continue;
            }
            ++cases;
            OmegaTriple t = phi(w);
            OffsetConstants off = offset_constants(t.P, t.Q, n);
            i64 h12 = distance(w, ic.c[0], ic.c[1]);
            if (h12 != t.rho[1] - t.rho[0] - off.r[1]) {
                run.fail("distalt", n,
                         to_text(w) + ": h(C1,C2)=" + std::to_string(h12) + " vs rho2-rho1-r2=" +
                             std::to_string(t.rho[1] - t.rho[0] - off.r[1]));
                return;
            }
            Window fw = forward_step(w, sw_numbering(w)).next;
            for (size_t i = 1; i + 1 < ic.c.size(); ++i) {
                i64 lhs = distance(w, ic.c[i], ic.c[i + 1]);
                i64 rhs = distance(fw, ic.d[i - 1], ic.d[i]);
                if (lhs != rhs) {
                    run.fail("distalt", n, to_text(w) + ": h(C_i,C_i+1) != h(D_i-1,D_i)");
                    return;
                }
            }
        }
        run.report("distalt", n, cases);
    }
}

}  // namespace

bool run_verify(const VerifyOptions& opts, std::ostream& out) {
    SuiteRun run{out};
    if (want(opts, "roundtrip")) suite_roundtrip(opts, run);
    if (run.ok && want(opts, "shi")) suite_shi(opts, run);
    if (run.ok && want(opts, "weyl")) suite_weyl(opts, run);
    if (run.ok && want(opts, "gravity")) suite_gravity(opts, run);
    if (run.ok && want(opts, "asymptotic")) suite_asymptotic(opts, run);
    if (run.ok && want(opts, "distalt")) suite_distalt(opts, run);
    return run.ok;
}

}  // namespace ambc
