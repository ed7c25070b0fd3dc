#include "ambc/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ambc/backward.hpp"
#include "ambc/channels.hpp"
#include "ambc/forward.hpp"

namespace ambc {

std::string render(const Window& w, const RenderOptions& opts) {
    const i64 n = w.n();
    i64 row_lo = opts.row_lo;
    i64 row_hi = opts.row_hi < row_lo ? row_lo + n - 1 : opts.row_hi;

    Numbering d;
    std::vector<ZigZagLevel> levels;
    std::vector<Cell> channel_cells;
    if (opts.numbering == RenderNumbering::Backward) {
        if (!opts.stream) throw std::invalid_argument("backward rendering needs a stream");
        d = backward_numbering(w, *opts.stream);
        levels = backward_step(w, *opts.stream, 0, true).levels;
    } else {
        Channel c = opts.numbering == RenderNumbering::SW ? southwest_channel(w) : northeast_channel(w);
        d = channel_numbering(w, c);
        levels = affine_forward_step(w, d, true).levels;
        channel_cells = c.generator;
    }

    auto on_channel = [&](const Cell& b) {
        for (const Cell& g : channel_cells)
            if (residue_rep(g.row, n) == residue_rep(b.row, n)) return true;
        return false;
    };

    std::map<Cell, std::string> tokens;
    i64 col_lo = 0, col_hi = 0;
    bool have_cols = false;
    auto widen = [&](i64 col) {
        if (!have_cols) {
            col_lo = col_hi = col;
            have_cols = true;
        }
        col_lo = std::min(col_lo, col);
        col_hi = std::max(col_hi, col);
    };

    for (i64 row = row_lo; row <= row_hi; ++row) {
        auto v = w.at(row);
        if (v) widen(*v);
    }
    if (opts.stream)
        for (const Cell& c : stream_cells(*opts.stream, row_lo, row_hi)) widen(c.col);

    // Zig-zag decoration within the visible window (translates included).
    auto place = [&](const Cell& c, const std::string& tok, bool overwrite) {
        if (c.row < row_lo || c.row > row_hi || c.col < col_lo || c.col > col_hi) return;
        if (!overwrite && tokens.count(c)) return;
        tokens[c] = tok;
    };

    for (i64 row = row_lo; row <= row_hi; ++row) {
        auto v = w.at(row);
        if (!v) continue;
        Cell b{row, *v};
        i64 val = d.eval(b);
        std::string body = std::to_string(val);
        place(b, on_channel(b) ? "[" + body + "]" : "(" + body + ")", true);
    }
    if (opts.stream)
        for (const Cell& c : stream_cells(*opts.stream, row_lo, row_hi)) place(c, "*", false);
    if (have_cols) {
        i64 span = std::max<i64>(1, (row_hi - row_lo) / n + 2);
        for (const ZigZagLevel& zl : levels)
            for (const Cell& c : zl.zigzag_cells)
                for (i64 k = -span; k <= span; ++k) place(c.translated(k, n), ".", false);
        for (const ZigZagLevel& zl : levels)
            for (i64 k = -span; k <= span; ++k) place(zl.back.translated(k, n), "*", false);
    }

    i64 width = 3;
    for (const auto& [c, tok] : tokens) width = std::max<i64>(width, static_cast<i64>(tok.size()));
    width += 1;

    std::ostringstream out;
    auto hrule = [&]() {
        out << "      +";
        for (i64 col = col_lo; col <= col_hi; ++col) {
            for (i64 t = 0; t < width; ++t) out << '-';
            if (residue_rep(col, n) == n) out << '+';
        }
        out << "\n";
    };

    // Column header.
    out << "      .";
    for (i64 col = col_lo; col <= col_hi; ++col) {
        std::string h = std::to_string(col);
        while (static_cast<i64>(h.size()) < width) h = " " + h;
        out << h;
        if (residue_rep(col, n) == n) out << '.';
    }
    out << "\n";
    if (residue_rep(row_lo - 1, n) == n) hrule();
    for (i64 row = row_lo; row <= row_hi; ++row) {
        std::string label = std::to_string(row);
        while (label.size() < 5) label = " " + label;
        out << label << " |";
        for (i64 col = col_lo; col <= col_hi; ++col) {
            auto it = tokens.find({row, col});
            std::string tok = it == tokens.end() ? "" : it->second;
            while (static_cast<i64>(tok.size()) < width) tok = " " + tok;
            out << tok;
            if (residue_rep(col, n) == n) out << '|';
        }
        out << "\n";
        if (residue_rep(row, n) == n) hrule();
    }
    return out.str();
}

}  // namespace ambc
