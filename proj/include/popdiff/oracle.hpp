#pragma once

#include "popdiff/rational.hpp"
#include "popdiff/sets.hpp"

#include "json.hpp"

#include <cstdint>
#include <vector>

namespace popdiff {

struct OracleConfig {
    long long n_cap = 20; // refuse larger N (combinatorial explosion)
    int jobs = 1;
};

struct OracleResult {
    long long n = 0;
    long long d = 0;
    Rat alpha;
    long long m = 0; // subset size searched, ceil(alpha*N)
    long long f = 0; // exact minimum of M_D over size-m subsets
    std::vector<long long> witness; // lexicographically least optimal subset
    std::uint64_t subsets_examined = 0;
};

// Exhaustive minimum of M_D(A) over subsets of [N] with |A| = ceil(alpha*N)
// (supersets only increase M_D, so the minimum is attained there).
// Lexicographic DFS with partial-max pruning; results, including the
// lexicographically least witness, are independent of cfg.jobs.
OracleResult exact_f(long long n, long long d, const Rat& alpha, const OracleConfig& cfg = {});

// Brute-force max over nonzero (a, b) of repr_grid. Requires p <= 61.
long long exact_max_rep_grid(const GridSet& a);

nlohmann::json to_json(const OracleResult& r);

} // namespace popdiff
