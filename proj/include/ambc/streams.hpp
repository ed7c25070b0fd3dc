#pragma once

#include <string>
#include <vector>

#include "ambc/core.hpp"
#include "ambc/tabloid.hpp"

namespace ambc {

// The stream st_r(A,B): the (n,n)-invariant SE chain of cells whose row
// residues are A and column residues are B, at altitude r. A and B are kept
// as sorted representatives in [1, n].
struct Stream {
    i64 n = 0;
    std::vector<i64> A;
    std::vector<i64> B;
    i64 r = 0;

    Stream() = default;
    Stream(i64 n, std::vector<i64> A, std::vector<i64> B, i64 r);

    i64 flow() const { return static_cast<i64>(A.size()); }

    // The t-th cell in SE order; t = 0 is the cell in the row A[0].
    Cell cell(i64 t) const;
    // One fundamental period, t = 0 .. flow-1.
    std::vector<Cell> period_cells() const;

    // Proper numbering of the stream: cell(t) gets t + 1 + shift. The default
    // shift 0 gives value 1 to the cell with the smallest positive row.
    i64 value_of(i64 t, i64 shift = 0) const { return t + 1 + shift; }
    // S^(i): the cell numbered i.
    Cell cell_numbered(i64 i, i64 shift = 0) const { return cell(i - 1 - shift); }

    friend bool operator==(const Stream&, const Stream&) = default;
};

// Cells of the stream whose rows lie in [row_lo, row_hi].
std::vector<Cell> stream_cells(const Stream& s, i64 row_lo, i64 row_hi);

// The unique (A, B, r) with cells = st_r(A,B); the cells may be any nonempty
// (n,n)-invariant-consistent sample containing at least one full period.
Stream defining_data(i64 n, const std::vector<Cell>& cells);

bool is_compatible(const Window& w, const Stream& s);

// The unique r with st_r(A2,B2) concurrent to st_0(A1,B1): the backward step
// of st_0(A1,B1) applied to the cells of st_r(A2,B2) yields one river.
i64 concurrent_altitude(const std::vector<i64>& A2, const std::vector<i64>& B2,
                        const std::vector<i64>& A1, const std::vector<i64>& B1, i64 n);

// Independent characterization of the same altitude: the backward numberings
// of the shifted streams t_r and t_{r+1} coincide on rows exactly when
// r >= r0; returns that threshold r0.
i64 concurrent_altitude_by_height(const std::vector<i64>& A2, const std::vector<i64>& B2,
                                  const std::vector<i64>& A1, const std::vector<i64>& B1, i64 n);

// Exhaustive window scan of the definitional river test; oracle counterpart
// of concurrent_altitude.
i64 concurrent_altitude_by_river_scan(const std::vector<i64>& A2, const std::vector<i64>& B2,
                                      const std::vector<i64>& A1, const std::vector<i64>& B1,
                                      i64 n);

struct OffsetConstants {
    std::vector<i64> r;  // r_1 = 0; r_i per the concurrency rule
    std::vector<i64> s;  // s_i = sum of r_j over the constant-shape block ending at i
};

OffsetConstants offset_constants(const Tabloid& P, const Tabloid& Q, i64 n);

std::string stream_to_json(const Stream& s);
Stream stream_from_json(const std::string& json_text, i64 n);

}  // namespace ambc
