#include "ambc/tabloid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ambc/finite_mbc.hpp"

namespace ambc {

std::vector<i64> Tabloid::shape() const {
    std::vector<i64> s;
    for (const auto& r : rows) s.push_back(static_cast<i64>(r.size()));
    return s;
}

i64 Tabloid::size() const {
    i64 total = 0;
    for (const auto& r : rows) total += static_cast<i64>(r.size());
    return total;
}

void Tabloid::canonicalize() {
    for (auto& r : rows) std::sort(r.begin(), r.end());
}

void OmegaTriple::validate() const {
    if (P.shape() != Q.shape()) throw InvalidTriple("P and Q have different shapes");
    if (static_cast<i64>(rho.size()) != static_cast<i64>(P.rows.size()))
        throw InvalidTriple("weight length differs from number of rows");
    auto shape = P.shape();
    for (size_t i = 0; i + 1 < shape.size(); ++i)
        if (shape[i] < shape[i + 1]) throw InvalidTriple("shape must be weakly decreasing");
    for (const Tabloid* t : {&P, &Q}) {
        std::set<i64> seen;
        for (const auto& row : t->rows) {
            if (row.empty()) throw InvalidTriple("empty tabloid row");
            for (i64 v : row) {
                if (v < 1 || v > n) throw InvalidTriple("residue out of range");
                if (!seen.insert(v).second) throw InvalidTriple("repeated residue in a tabloid");
            }
        }
    }
    if (P.size() > n) throw InvalidTriple("tabloid larger than n");
}

bool standardizable(const Tabloid& t, i64 n) {
    StandardTableau tab;
    for (const auto& row : t.rows) {
        std::vector<i64> r;
        for (i64 v : row) r.push_back(residue_rep(v, n));
        std::sort(r.begin(), r.end());
        tab.rows.push_back(std::move(r));
    }
    return tab.valid();
}

namespace {

std::string rows_to_text(const Tabloid& t) {
    std::string out;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (i) out += "|";
        for (size_t j = 0; j < t.rows[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(t.rows[i][j]);
        }
    }
    return out;
}

std::vector<std::vector<i64>> parse_rows(const std::string& s) {
    std::vector<std::vector<i64>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, '|')) {
        std::vector<i64> vals;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ',')) {
            try {
                size_t pos = 0;
                vals.push_back(std::stoll(tok, &pos));
                if (pos != tok.size()) throw ParseError("bad integer: " + tok);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError("bad integer: " + tok);
            }
        }
        if (vals.empty()) throw ParseError("empty tabloid row");
        rows.push_back(std::move(vals));
    }
    return rows;
}

}  // namespace

std::string to_text(const OmegaTriple& t) {
    std::string out = rows_to_text(t.P);
    out += " ; ";
    out += rows_to_text(t.Q);
    out += " ; ";
    for (size_t i = 0; i < t.rho.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t.rho[i]);
    }
    return out;
}

OmegaTriple triple_from_text(const std::string& text, i64 n) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(" ; ", start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 3;
    }
    if (parts.size() != 3) throw ParseError("triple text must have three ' ; '-separated parts");
    OmegaTriple t;
    t.n = n;
    t.P.rows = parse_rows(parts[0]);
    t.Q.rows = parse_rows(parts[1]);
    std::stringstream rs(parts[2]);
    std::string tok;
    while (std::getline(rs, tok, ',')) {
        try {
            size_t pos = 0;
            t.rho.push_back(std::stoll(tok, &pos));
            if (pos != tok.size()) throw ParseError("bad weight entry: " + tok);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad weight entry: " + tok);
        }
    }
    t.P.canonicalize();
    t.Q.canonicalize();
    t.validate();
    return t;
}

std::string triple_to_json(const OmegaTriple& t) {
    nlohmann::json j;
    j["P"] = t.P.rows;
    j["Q"] = t.Q.rows;
    j["rho"] = t.rho;
    return j.dump();
}

OmegaTriple triple_from_json(const std::string& json_text, i64 n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    OmegaTriple t;
    t.n = n;
    try {
        t.P.rows = j.at("P").get<std::vector<std::vector<i64>>>();
        t.Q.rows = j.at("Q").get<std::vector<std::vector<i64>>>();
        t.rho = j.at("rho").get<std::vector<i64>>();
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad triple JSON: ") + e.what());
    }
    t.P.canonicalize();
    t.Q.canonicalize();
    t.validate();
    return t;
}

}  // namespace ambc
