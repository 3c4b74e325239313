#pragma once

#include "popdiff/numtheory.hpp"
#include "popdiff/rational.hpp"
#include "popdiff/sets.hpp"

#include "json.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace popdiff {

// gamma = D*alpha - 1, exact.
struct RegimeParams {
    long long n = 0;
    long long d = 0;
    Rat alpha;
    Rat gamma;
};

RegimeParams make_regime_params(long long n, long long d, const Rat& alpha);

enum class RegimeTag { zero, small_gamma, large_gamma, outside };

const char* regime_tag_name(RegimeTag t);

struct RegimeClassification {
    RegimeTag tag = RegimeTag::zero;
    Rat gamma;
    std::optional<Rat> delta;  // 1 - gamma when 0 < gamma < 1
    bool d_margin_ok = false;  // D*delta > 1
    bool n_size_ok = false;    // N >= 2 D^3 / (D*delta - 1)
};

RegimeClassification classify_regime(long long n, long long d, const Rat& alpha);

struct ApCertificate {
    long long n = 0;
    Rat alpha;
    long long a = 0; // common gap floor(1/alpha)
    long long l = 0; // last multiplier, so |A| = l + 1
    long long size = 0;
};

// {1, a+1, 2a+1, ..., la+1}: density >= alpha and M_D = 0 for every D <= a.
std::pair<IntegerSet, ApCertificate> construct_ap(long long n, const Rat& alpha);

struct BlockCertificate {
    long long n = 0;
    long long d = 0;
    Rat alpha;
    std::vector<long long> base_pattern; // B, |B| = 2D-1
    long long k = 0;                     // block repetitions (clamped at 0)
    long long m_quot = 0;                // floor(N/D)
    std::vector<long long> part1;        // A1
    std::vector<long long> part2;        // A2
    long long size = 0;                  // kD + M - k
};

// Requires D(2 - D*alpha) > 1 and N >= D(D-1)(2D+1)/(D(2-D*alpha)-1).
// Output satisfies |A| >= alpha*N and M_D(A) <= 2k.
std::pair<IntegerSet, BlockCertificate> construct_block(long long n, long long d, const Rat& alpha);

bool block_hypotheses_hold(long long n, long long d, const Rat& alpha, std::string* why = nullptr);

struct ParabolaCertificate {
    long long p = 0;
    long long k = 0;
    long long n_star = 0;
    long long u_first = 0; // n* + 1
    long long u_last = 0;  // n* + k
    long long size = 0;    // kp - k + 1
    unsigned long long capacity = 0; // prop1_capacity(k)
    bool refinement_holds = true;    // S_{n*}^4 < 7^4 k^7, checked, never assumed
};

// Union of the k parabolas {(x, x^2/u)} with u = n*+1 .. n*+k; they pairwise
// meet only at (0,0). Requires p >= 2k.
std::pair<GridSet, ParabolaCertificate> construct_parabola_union(const PrimeModulus& p, long long k);

struct ProjectionCertificate {
    long long p = 0;
    long long s = 0;
    long long source_size = 0; // m
    long long source_max = 0;  // h = max nonzero grid repr of the source
    long long size = 0;        // m*s
    long long cap = 0;         // h*(s+1)
};

// A' = {a + c*p + b*s*p : (a,b) in A, 0 <= c < s} in Z/(p^2 s)Z.
std::pair<CyclicSet, ProjectionCertificate> project_to_cyclic(const GridSet& a, long long s);

struct CyclicCertificate {
    long long p = 0;
    long long s = 0;
    long long k = 0; // ceil(p*alpha) + 1
    Rat alpha;
    long long modulus = 0; // p^2 s
    long long size = 0;    // (kp - k + 1) s
    unsigned long long cap = 0; // prop1_capacity(k) * (s+1)
    ParabolaCertificate parabola;
    ProjectionCertificate projection;
};

// Requires 0 < alpha < 1/2 and 2(ceil(p*alpha)+1) <= p.
std::pair<CyclicSet, CyclicCertificate> construct_cyclic(const PrimeModulus& p, long long s,
                                                         const Rat& alpha);

struct IntegerCertificate {
    long long n = 0;
    Rat alpha;
    long long p_search_start = 0; // ceil(N^(2/5))
    CyclicCertificate cyclic;
};

// Picks the first admissible prime p >= ceil(N^(2/5)) with p^2 <= N and
// 2(ceil(p*alpha)+1) <= p, sets s = floor(N/p^2), and reads the cyclic
// construction's residues as integers in [1, p^2 s] (0 maps to p^2 s).
std::pair<IntegerSet, IntegerCertificate> construct_integer(long long n, const Rat& alpha);

nlohmann::json to_json(const ApCertificate&);
nlohmann::json to_json(const BlockCertificate&);
nlohmann::json to_json(const ParabolaCertificate&);
nlohmann::json to_json(const ProjectionCertificate&);
nlohmann::json to_json(const CyclicCertificate&);
nlohmann::json to_json(const IntegerCertificate&);
nlohmann::json rational_json(const Rat& q);

} // namespace popdiff
