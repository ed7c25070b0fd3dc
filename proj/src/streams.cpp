#include "ambc/streams.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

#include "ambc/backward.hpp"
#include "ambc/channels.hpp"
#include "ambc/shi_poset.hpp"

namespace ambc {

Stream::Stream(i64 n_, std::vector<i64> A_, std::vector<i64> B_, i64 r_)
    : n(n_), A(std::move(A_)), B(std::move(B_)), r(r_) {
    std::sort(A.begin(), A.end());
    std::sort(B.begin(), B.end());
    if (A.empty() || A.size() != B.size()) throw NotAStream("row and column sets must be nonempty and equal in size");
    for (const auto* v : {&A, &B}) {
        for (size_t i = 0; i < v->size(); ++i) {
            if ((*v)[i] < 1 || (*v)[i] > n) throw NotAStream("residue out of range");
            if (i > 0 && (*v)[i] == (*v)[i - 1]) throw NotAStream("repeated residue");
        }
    }
}

Cell Stream::cell(i64 t) const {
    const i64 k = flow();
    i64 qr = floor_div(t, k);
    i64 row = A[t - qr * k] + qr * n;
    i64 tc = t + r;
    i64 qc = floor_div(tc, k);
    i64 col = B[tc - qc * k] + qc * n;
    return {row, col};
}

std::vector<Cell> Stream::period_cells() const {
    std::vector<Cell> out;
    for (i64 t = 0; t < flow(); ++t) out.push_back(cell(t));
    return out;
}

std::vector<Cell> stream_cells(const Stream& s, i64 row_lo, i64 row_hi) {
    std::vector<Cell> out;
    const i64 k = s.flow();
    i64 t_lo = ceil_div(row_lo - s.A.back(), s.n) * k;
    i64 t_hi = (floor_div(row_hi - s.A.front(), s.n) + 1) * k;
    for (i64 t = t_lo; t <= t_hi; ++t) {
        Cell c = s.cell(t);
        if (c.row >= row_lo && c.row <= row_hi) out.push_back(c);
    }
    return out;
}

Stream defining_data(i64 n, const std::vector<Cell>& cells) {
    if (cells.empty()) throw NotAStream("no cells");
    std::map<i64, i64> col_of_row_rep;  // row rep -> column of the representative cell
    std::set<i64> col_reps;
    for (const Cell& c : cells) {
        i64 rep = residue_rep(c.row, n);
        i64 col = c.col - (c.row - rep);
        auto [it, inserted] = col_of_row_rep.emplace(rep, col);
        if (!inserted && it->second != col) throw NotAStream("cells disagree within a translate class");
        if (!col_reps.insert(residue_rep(c.col, n)).second && inserted)
            throw NotAStream("two cell classes share a column residue");
    }
    std::vector<i64> A, B;
    for (const auto& [row, col] : col_of_row_rep) A.push_back(row);
    for (i64 c : col_reps) B.push_back(c);
    std::sort(B.begin(), B.end());

    // Altitude: locate the column of the cell in row A[0] inside the SE-sorted
    // column sequence of the class.
    const i64 k = static_cast<i64>(A.size());
    i64 c0 = col_of_row_rep[A[0]];
    i64 crep = residue_rep(c0, n);
    i64 idx = std::find(B.begin(), B.end(), crep) - B.begin();
    i64 r = idx + ((c0 - crep) / n) * k;

    Stream s(n, A, B, r);
    for (const Cell& c : cells) {
        i64 rep = residue_rep(c.row, n);
        i64 t = (std::find(A.begin(), A.end(), rep) - A.begin()) + ((c.row - rep) / n) * k;
        if (s.cell(t) != c) throw NotAStream("cells do not form a stream");
    }
    return s;
}

bool is_compatible(const Window& w, const Stream& s) {
    for (i64 row : w.defined_rows()) {
        if (std::binary_search(s.A.begin(), s.A.end(), row)) return false;
        i64 col = residue_rep(*w.at(row), w.n());
        if (std::binary_search(s.B.begin(), s.B.end(), col)) return false;
    }
    if (w.is_empty()) return true;
    return s.flow() >= width(shi_poset(w));
}

namespace {

// Balls of the permutation carrying the cells of st_r(A2,B2), indexed so that
// ball t sits in the same row as stream-cell index t.
Window stream_permutation(const Stream& t) { return window_from_balls(t.n, t.period_cells()); }

bool concurrent_by_river(const Stream& T, const Stream& S) {
    Window t = stream_permutation(T);
    BackwardStepResult step = backward_step(t, S);
    return rivers(step.next).size() == 1;
}

// d and d' are backward numberings of t_r and t_{r+1} with respect to the
// same numbering of S; compare them on rows (resp. columns).
bool coincide_on_rows(const Stream& T, const Stream& S) {
    Stream T1(T.n, T.A, T.B, T.r + 1);
    Numbering d = backward_numbering(stream_permutation(T), S);
    Numbering d1 = backward_numbering(stream_permutation(T1), S);
    for (i64 t = 0; t < T.flow(); ++t)
        if (d.eval(T.cell(t)) != d1.eval(T1.cell(t))) return false;
    return true;
}

bool coincide_on_cols(const Stream& T, const Stream& S) {
    Stream T1(T.n, T.A, T.B, T.r + 1);
    Numbering d = backward_numbering(stream_permutation(T), S);
    Numbering d1 = backward_numbering(stream_permutation(T1), S);
    // The ball of t_r in the column of t_{r+1}'s cell t is cell t+1.
    for (i64 t = 0; t < T.flow(); ++t)
        if (d1.eval(T1.cell(t)) != d.eval(T.cell(t + 1))) return false;
    return true;
}

void check_hypothesis(const std::vector<i64>& A2, const std::vector<i64>& B2,
                      const std::vector<i64>& A1, const std::vector<i64>& B1, i64 n) {
    if (A1.size() != A2.size() || B1.size() != B2.size() || A1.size() != B1.size())
        throw std::invalid_argument("stream classes must have equal flow");
    for (i64 a : A2)
        if (std::find(A1.begin(), A1.end(), a) != A1.end())
            throw std::invalid_argument("row residue sets must be disjoint");
    for (i64 b : B2)
        if (std::find(B1.begin(), B1.end(), b) != B1.end())
            throw std::invalid_argument("column residue sets must be disjoint");
    if (static_cast<i64>(A1.size() + A2.size()) > n)
        throw std::invalid_argument("residue sets exceed n");
}

i64 search_window(i64 n) { return 2 * n + 2; }  // covers the diagonal spread of stream cells

}  // namespace

i64 concurrent_altitude(const std::vector<i64>& A2, const std::vector<i64>& B2,
                        const std::vector<i64>& A1, const std::vector<i64>& B1, i64 n) {
    // The coincidence threshold localizes the altitude; confirm it and its
    // local uniqueness with the definitional river test.
    i64 r0 = concurrent_altitude_by_height(A2, B2, A1, B1, n);
    Stream S(n, A1, B1, 0);
    if (!concurrent_by_river(Stream(n, A2, B2, r0), S))
        throw NoValidAltitude("threshold altitude fails the river test");
    if (concurrent_by_river(Stream(n, A2, B2, r0 - 1), S) ||
        concurrent_by_river(Stream(n, A2, B2, r0 + 1), S))
        throw NoValidAltitude("river test is not locally unique");
    return r0;
}

// Full-window scan of the definitional river test; used as an independent
// oracle against concurrent_altitude.
i64 concurrent_altitude_by_river_scan(const std::vector<i64>& A2, const std::vector<i64>& B2,
                                      const std::vector<i64>& A1, const std::vector<i64>& B1,
                                      i64 n) {
    check_hypothesis(A2, B2, A1, B1, n);
    Stream S(n, A1, B1, 0);
    const i64 lim = search_window(n);
    i64 found = 0;
    int hits = 0;
    for (i64 r = -lim; r <= lim; ++r) {
        if (concurrent_by_river(Stream(n, A2, B2, r), S)) {
            found = r;
            ++hits;
        }
    }
    if (hits != 1) throw NoValidAltitude("expected exactly one concurrent altitude in the window");
    return found;
}

i64 concurrent_altitude_by_height(const std::vector<i64>& A2, const std::vector<i64>& B2,
                                  const std::vector<i64>& A1, const std::vector<i64>& B1, i64 n) {
    check_hypothesis(A2, B2, A1, B1, n);
    Stream S(n, A1, B1, 0);
    const i64 lim = search_window(n);
    i64 lo = -lim, hi = lim;
    if (coincide_on_rows(Stream(n, A2, B2, lo), S) || !coincide_on_rows(Stream(n, A2, B2, hi), S))
        throw NoValidAltitude("no coincidence flip inside the window");
    // Monotone flip: rows coincide exactly for r >= r0.
    while (lo + 1 < hi) {
        i64 mid = lo + (hi - lo) / 2;
        if (coincide_on_rows(Stream(n, A2, B2, mid), S))
            hi = mid;
        else
            lo = mid;
    }
    if (!coincide_on_cols(Stream(n, A2, B2, hi - 1), S))
        throw NoValidAltitude("columns fail to coincide below the threshold");
    return hi;
}

OffsetConstants offset_constants(const Tabloid& P, const Tabloid& Q, i64 n) {
    if (P.shape() != Q.shape()) throw ShapeMismatch("tabloids must have equal shapes");
    auto shape = P.shape();
    const i64 len = static_cast<i64>(shape.size());
    OffsetConstants out;
    out.r.assign(len, 0);
    out.s.assign(len, 0);
    // Row i of a triple encodes the stream st_{rho_i}(Q_i, P_i), so the
    // concurrency constraint between consecutive equal-length rows compares
    // the (Q_i, P_i) classes.
    for (i64 i = 1; i < len; ++i) {
        if (shape[i] < shape[i - 1]) continue;
        out.r[i] = concurrent_altitude(Q.rows[i], P.rows[i], Q.rows[i - 1], P.rows[i - 1], n);
    }
    for (i64 i = 0; i < len; ++i) {
        i64 block_start = i;
        while (block_start > 0 && shape[block_start - 1] == shape[i]) --block_start;
        i64 acc = 0;
        for (i64 j = block_start; j <= i; ++j) acc += out.r[j];
        out.s[i] = acc;
    }
    return out;
}

std::string stream_to_json(const Stream& s) {
    nlohmann::json j;
    j["A"] = s.A;
    j["B"] = s.B;
    j["r"] = s.r;
    return j.dump();
}

Stream stream_from_json(const std::string& json_text, i64 n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
        return Stream(n, j.at("A").get<std::vector<i64>>(), j.at("B").get<std::vector<i64>>(),
                      j.at("r").get<i64>());
    } catch (const NotAStream&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad stream JSON: ") + e.what());
    }
}

}  // namespace ambc
