#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ambc {

using i64 = long long;

// Error types named after the failure they report.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInjective : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PartialNotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidKnuthMove : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyPoset : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Incompatible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAStream : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoValidAltitude : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidTriple : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotEmptyForward : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoStabilization : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotEnoughChannels : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cell of the infinite matrix; rows increase downward, columns to the right.
struct Cell {
    i64 row = 0;
    i64 col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;

    Cell translated(i64 k, i64 n) const { return {row + k * n, col + k * n}; }
    i64 diagonal() const { return col - row; }
};

// b strictly northwest of b' means strictly north and strictly west.
inline bool strictly_nw(const Cell& a, const Cell& b) { return a.row < b.row && a.col < b.col; }
inline bool strictly_se(const Cell& a, const Cell& b) { return strictly_nw(b, a); }
inline bool weakly_nw(const Cell& a, const Cell& b) { return a.row <= b.row && a.col <= b.col; }
inline bool weakly_se(const Cell& a, const Cell& b) { return weakly_nw(b, a); }
inline bool weakly_sw(const Cell& a, const Cell& b) { return a.row >= b.row && a.col <= b.col; }
inline bool weakly_ne(const Cell& a, const Cell& b) { return weakly_sw(b, a); }
inline bool strictly_sw(const Cell& a, const Cell& b) { return a.row > b.row && a.col < b.col; }
inline bool strictly_ne(const Cell& a, const Cell& b) { return strictly_sw(b, a); }

// Residue representative of x in [1, n].
inline i64 residue_rep(i64 x, i64 n) {
    i64 r = x % n;
    if (r <= 0) r += n;
    return r;
}

// Floor and ceiling division for b > 0, correct for negative a.
inline i64 floor_div(i64 a, i64 b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline i64 ceil_div(i64 a, i64 b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// Exact rational; center_of_gravity returns one. Always kept in lowest terms
// with a positive denominator.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 numerator, i64 denominator);

    friend bool operator==(const Rational&, const Rational&) = default;
    bool is_integer(i64 v) const { return den == 1 && num == v; }
};

// A partial extended affine permutation stored by its window. Entry i (1-based)
// holds w(i), or nothing when w is undefined on the residue class of i. The
// periodic extension w(i + n) = w(i) + n is implied.
class Window {
public:
    Window(i64 n, std::vector<std::optional<i64>> entries);

    static Window empty(i64 n) { return Window(n, std::vector<std::optional<i64>>(n)); }

    i64 n() const { return n_; }
    const std::vector<std::optional<i64>>& entries() const { return entries_; }

    bool is_total() const;
    bool is_empty() const;
    i64 defined_count() const;

    // Value at any integer row via periodicity; nullopt when undefined there.
    std::optional<i64> at(i64 row) const;

    // Representative balls, one per translate class, rows in [1, n], sorted by row.
    std::vector<Cell> balls() const;
    // Row representatives (in [1, n]) of the defined residue classes, sorted.
    std::vector<i64> defined_rows() const;

    friend bool operator==(const Window&, const Window&) = default;

private:
    i64 n_;
    std::vector<std::optional<i64>> entries_;
};

// Window text format: "[4,1,6,11,2,3]" with "_" for an undefined entry.
Window parse_window(const std::string& text, i64 n);
std::string to_text(const Window& w);

// Builds a window from an arbitrary set of balls with distinct row and column
// residues; each ball stands for its whole translate class.
Window window_from_balls(i64 n, const std::vector<Cell>& cells);

Window inverse(const Window& w);
Window shift_window(const Window& w, i64 k);
Window knuth_move(const Window& w, i64 i);
Rational center_of_gravity(const Window& w);

// JSON representation {"n": int, "window": [int|null, ...]}.
std::string window_to_json(const Window& w);
Window window_from_json(const std::string& json_text);

}  // namespace ambc
