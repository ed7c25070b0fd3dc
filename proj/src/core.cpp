#include "ambc/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ambc {

Rational::Rational(i64 numerator, i64 denominator) : num(numerator), den(denominator) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Window::Window(i64 n, std::vector<std::optional<i64>> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ <= 0) throw ParseError("period must be positive");
    if (static_cast<i64>(entries_.size()) != n_) throw ParseError("window length must equal n");
    std::set<i64> seen;
    for (const auto& e : entries_) {
        if (!e) continue;
        if (!seen.insert(residue_rep(*e, n_)).second)
            throw NotInjective("two window entries share a residue class");
    }
}

bool Window::is_total() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.has_value(); });
}

bool Window::is_empty() const {
    return std::none_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.has_value(); });
}

i64 Window::defined_count() const {
    return static_cast<i64>(std::count_if(entries_.begin(), entries_.end(),
                                          [](const auto& e) { return e.has_value(); }));
}

std::optional<i64> Window::at(i64 row) const {
    i64 rep = residue_rep(row, n_);
    const auto& e = entries_[rep - 1];
    if (!e) return std::nullopt;
    return *e + (row - rep);
}

std::vector<Cell> Window::balls() const {
    std::vector<Cell> out;
    for (i64 i = 1; i <= n_; ++i)
        if (entries_[i - 1]) out.push_back({i, *entries_[i - 1]});
    return out;
}

std::vector<i64> Window::defined_rows() const {
    std::vector<i64> out;
    for (i64 i = 1; i <= n_; ++i)
        if (entries_[i - 1]) out.push_back(i);
    return out;
}

Window parse_window(const std::string& text, i64 n) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("window must be bracketed");
    s = s.substr(1, s.size() - 2);

    std::vector<std::optional<i64>> entries;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok == "_") {
                entries.push_back(std::nullopt);
            } else {
                size_t pos = 0;
                i64 v = 0;
                try {
                    v = std::stoll(tok, &pos);
                } catch (const std::exception&) {
                    throw ParseError("bad window entry: " + tok);
                }
                if (pos != tok.size()) throw ParseError("bad window entry: " + tok);
                entries.emplace_back(v);
            }
        }
        if (!s.empty() && s.back() == ',') throw ParseError("trailing comma");
    }
    if (static_cast<i64>(entries.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " entries");
    return Window(n, std::move(entries));
}

std::string to_text(const Window& w) {
    std::string out = "[";
    for (i64 i = 0; i < w.n(); ++i) {
        if (i) out += ",";
        const auto& e = w.entries()[i];
        out += e ? std::to_string(*e) : "_";
    }
    out += "]";
    return out;
}

Window window_from_balls(i64 n, const std::vector<Cell>& cells) {
    std::vector<std::optional<i64>> entries(n);
    for (const Cell& c : cells) {
        i64 rep = residue_rep(c.row, n);
        i64 val = c.col - (c.row - rep);
        if (entries[rep - 1] && *entries[rep - 1] != val)
            throw NotInjective("two balls share a row residue");
        entries[rep - 1] = val;
    }
    return Window(n, std::move(entries));
}

Window inverse(const Window& w) {
    if (!w.is_total()) throw PartialNotInvertible("partial permutation has no inverse");
    std::vector<Cell> transposed;
    for (const Cell& b : w.balls()) transposed.push_back({b.col, b.row});
    return window_from_balls(w.n(), transposed);
}

Window shift_window(const Window& w, i64 k) {
    const i64 n = w.n();
    std::vector<std::optional<i64>> entries(n);
    for (i64 i = 1; i <= n; ++i) entries[i - 1] = w.at(i + k);
    return Window(n, std::move(entries));
}

Window knuth_move(const Window& w, i64 i) {
    const i64 n = w.n();
    if (!w.is_total()) throw InvalidKnuthMove("Knuth moves require a total permutation");
    if (n == 1 || residue_rep(i, n) == residue_rep(i + 1, n))
        throw InvalidKnuthMove("positions i and i+1 share a residue class");

    i64 wi = *w.at(i), wi1 = *w.at(i + 1);
    auto between = [&](i64 x) {
        return (wi < x && x < wi1) || (wi1 < x && x < wi);
    };
    if (!between(*w.at(i - 1)) && !between(*w.at(i + 2)))
        throw InvalidKnuthMove("neither neighbor lies between w(i) and w(i+1)");

    std::vector<std::optional<i64>> entries(n);
    for (i64 r = 1; r <= n; ++r) entries[r - 1] = w.at(r);
    i64 ri = residue_rep(i, n), ri1 = residue_rep(i + 1, n);
    entries[ri - 1] = wi1 - (i - ri);
    entries[ri1 - 1] = wi - (i + 1 - ri1);
    return Window(n, std::move(entries));
}

Rational center_of_gravity(const Window& w) {
    i64 sum = 0;
    for (const Cell& b : w.balls()) sum += b.diagonal();
    return Rational(sum, w.n());
}

std::string window_to_json(const Window& w) {
    nlohmann::json j;
    j["n"] = w.n();
    auto arr = nlohmann::json::array();
    for (const auto& e : w.entries()) {
        if (e)
            arr.push_back(*e);
        else
            arr.push_back(nullptr);
    }
    j["window"] = arr;
    return j.dump();
}

Window window_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("window")) throw ParseError("missing n or window");
    i64 n = j["n"].get<i64>();
    std::vector<std::optional<i64>> entries;
    for (const auto& e : j["window"]) {
        if (e.is_null())
            entries.push_back(std::nullopt);
        else
            entries.emplace_back(e.get<i64>());
    }
    if (static_cast<i64>(entries.size()) != n) throw ParseError("window length must equal n");
    return Window(n, std::move(entries));
}

}  // namespace ambc
