#pragma once

#include "popdiff/constructions.hpp"
#include "popdiff/rational.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace popdiff {

// 2(D*alpha - 1)/(D(D-1)) * N - 2/D. May be negative; callers clamp for display.
Rat lb_inclusion_exclusion(long long n, long long d, const Rat& alpha);

// alpha^2 N^2 / (N + D) - (alpha N + 1)/D.
Rat lb_fourier(long long n, long long d, const Rat& alpha);

// alpha^2 N - 1 (cyclic ambient, full-group window).
Rat lb_cyclic_counting(long long n, const Rat& alpha);

// 2(D*alpha - 1)/(D(D-1)) * N + 4; throws precondition_error naming whichever
// hypothesis of the block construction fails.
Rat ub_block(long long n, long long d, const Rat& alpha);

struct BoundsReport {
    RegimeParams params;
    RegimeClassification regime;
    Rat lb_ie;
    Rat lb_fourier_v;
    Rat fourier_main_term; // alpha^2 N^2/(N+D); informational
    Rat fourier_asymptote; // alpha^2 N; informational
    std::optional<Rat> lb_cyclic;             // cyclic ambient only
    std::optional<Rat> ub_block_v;            // present when both hypotheses hold
    std::string ub_block_unavailable_reason;  // otherwise, which hypothesis failed
    std::optional<Rat> remark_coefficient;    // 2 alpha^3/(1+alpha) when 1/alpha integer, D = 1/alpha + 1
    std::optional<unsigned long long> cap_parabola_projection; // when (p, s) supplied
};

BoundsReport make_bounds_report(long long n, long long d, const Rat& alpha, bool cyclic_ambient,
                                std::optional<std::pair<long long, long long>> ps = std::nullopt);

nlohmann::json to_json(const BoundsReport& r);

} // namespace popdiff
