#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ambc/core.hpp"
#include "ambc/tabloid.hpp"

namespace ambc {

// All windows sigma(i) + n*k_i for sigma in S_n, k_i in [-shift_max, shift_max].
std::vector<Window> enumerate_windows(i64 n, i64 shift_max);

// All same-shape tabloid pairs of total size n over the residues [1, n].
std::vector<std::pair<Tabloid, Tabloid>> enumerate_tabloid_pairs(i64 n);

std::vector<Weight> enumerate_weights(i64 len, i64 lo, i64 hi);

struct VerifyOptions {
    i64 n_max = 3;
    i64 shift_max = 2;
    std::string suite = "all";  // roundtrip|shi|weyl|gravity|asymptotic|distalt|all
    std::uint64_t seed = 12345;
};

// Runs the requested theorem suites, one output line per (suite, n); prints a
// minimal counterexample and returns false on any violation.
bool run_verify(const VerifyOptions& opts, std::ostream& out);

std::uint64_t seed_from_env(std::uint64_t fallback = 12345);

}  // namespace ambc
