#include "popdiff/constructions.hpp"

#include "popdiff/errors.hpp"
#include "popdiff/repr.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace popdiff {

using nlohmann::json;

RegimeParams make_regime_params(long long n, long long d, const Rat& alpha) {
    if (n < 1 || d < 2 || d > n) throw precondition_error("need 2 <= D <= N");
    if (alpha <= 0 || alpha >= 1) throw precondition_error("need 0 < alpha < 1");
    RegimeParams rp;
    rp.n = n;
    rp.d = d;
    rp.alpha = alpha;
    rp.gamma = Rat(alpha * d) - 1;
    return rp;
}

const char* regime_tag_name(RegimeTag t) {
    switch (t) {
    case RegimeTag::zero: return "zero";
    case RegimeTag::small_gamma: return "small-gamma";
    case RegimeTag::large_gamma: return "large-gamma";
    case RegimeTag::outside: return "outside";
    }
    return "?";
}

RegimeClassification classify_regime(long long n, long long d, const Rat& alpha) {
    RegimeParams rp = make_regime_params(n, d, alpha);
    RegimeClassification rc;
    rc.gamma = rp.gamma;
    if (rp.gamma <= 0) {
        rc.tag = RegimeTag::zero;
        return rc;
    }
    if (rp.gamma >= 1) {
        rc.tag = RegimeTag::large_gamma; // asymptotic clause, tag only
        return rc;
    }
    Rat delta = Rat(1) - rp.gamma; // largest admissible margin
    rc.delta = delta;
    Rat d_delta = delta * d;
    rc.d_margin_ok = d_delta > 1;
    if (rc.d_margin_ok) {
        // N >= 2 D^3 / (D*delta - 1)
        Rat bound = Rat(2 * d * d * d) / (d_delta - 1);
        rc.n_size_ok = Rat(n) >= bound;
    }
    rc.tag = (rc.d_margin_ok && rc.n_size_ok) ? RegimeTag::small_gamma : RegimeTag::outside;
    return rc;
}

std::pair<IntegerSet, ApCertificate> construct_ap(long long n, const Rat& alpha) {
    if (n < 1) throw precondition_error("construct_ap requires N >= 1");
    if (alpha <= 0 || alpha >= 1) throw precondition_error("construct_ap requires 0 < alpha < 1");
    long long a = to_ll(rat_floor(Rat(1) / alpha));
    long long l = (n - 1) / a;
    std::vector<long long> elems;
    elems.reserve(static_cast<std::size_t>(l + 1));
    for (long long i = 0; i <= l; ++i) elems.push_back(i * a + 1);
    IntegerSet set = IntegerSet::create(n, std::move(elems));
    if (Rat(set.size()) < alpha * n) throw defect_error("construct_ap produced a set below density");
    ApCertificate cert{n, alpha, a, l, set.size()};
    return {std::move(set), cert};
}

bool block_hypotheses_hold(long long n, long long d, const Rat& alpha, std::string* why) {
    if (d < 2 || d > n || alpha <= 0 || alpha >= 1) {
        if (why) *why = "need 2 <= D <= N and 0 < alpha < 1";
        return false;
    }
    Rat margin = Rat(d) * (Rat(2) - alpha * d); // D(2 - D*alpha)
    if (margin <= 1) {
        if (why) *why = "D(2-D*alpha) > 1 fails: D(2-D*alpha) = " + format_rational(margin);
        return false;
    }
    Rat n_floor = Rat(d * (d - 1) * (2 * d + 1)) / (margin - 1);
    if (Rat(n) < n_floor) {
        if (why)
            *why = "N >= D(D-1)(2D+1)/(D(2-D*alpha)-1) fails: N too small, need N >= " +
                   decimal_string(n_floor) + " (exactly " + format_rational(n_floor) + ")";
        return false;
    }
    return true;
}

std::pair<IntegerSet, BlockCertificate> construct_block(long long n, long long d, const Rat& alpha) {
    std::string why;
    if (!block_hypotheses_hold(n, d, alpha, &why)) throw precondition_error("construct_block: " + why);

    // B = {D, 2D, ..., D^2} U {1, D+2, 2D+3, ..., (D-2)D + D-1}
    std::vector<long long> base;
    for (long long j = 1; j <= d; ++j) base.push_back(j * d);
    for (long long i = 0; i <= d - 2; ++i) base.push_back(i * d + i + 1);
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    if (static_cast<long long>(base.size()) != 2 * d - 1)
        throw defect_error("base pattern size != 2D-1");

    long long m_quot = n / d;
    long long k = to_ll(rat_ceil((alpha * n - m_quot) / Rat(d - 1)));
    if (k < 0) k = 0;
    if (k * d > m_quot)
        throw defect_error("construct_block: kD > floor(N/D) despite hypotheses");

    std::vector<long long> part1;
    part1.reserve(static_cast<std::size_t>(k) * base.size());
    for (long long i = 0; i < k; ++i)
        for (long long x : base) part1.push_back(x + i * d * d);
    std::vector<long long> part2;
    for (long long j = k * d + 1; j <= m_quot; ++j) part2.push_back(j * d);

    std::vector<long long> elems = part1;
    elems.insert(elems.end(), part2.begin(), part2.end());
    IntegerSet set = IntegerSet::create(n, std::move(elems));
    if (set.size() != k * d + m_quot - k)
        throw defect_error("construct_block: |A| != kD + M - k (parts overlap)");
    if (Rat(set.size()) < alpha * n)
        throw defect_error("construct_block: density below alpha");

    BlockCertificate cert;
    cert.n = n;
    cert.d = d;
    cert.alpha = alpha;
    cert.base_pattern = std::move(base);
    cert.k = k;
    cert.m_quot = m_quot;
    cert.part1 = std::move(part1);
    cert.part2 = std::move(part2);
    cert.size = set.size();
    return {std::move(set), std::move(cert)};
}

std::pair<GridSet, ParabolaCertificate> construct_parabola_union(const PrimeModulus& pm, long long k) {
    long long p = pm.value();
    if (k < 1) throw precondition_error("construct_parabola_union requires k >= 1");
    if (2 * k > p)
        throw precondition_error("construct_parabola_union requires p >= 2k (p=" +
                                 std::to_string(p) + ", k=" + std::to_string(k) + ")");
    WeilSumProfile prof = weil_sum_profile(pm, k);
    std::set<GridPoint> pts;
    for (long long u = prof.n_star + 1; u <= prof.n_star + k; ++u) {
        long long inv_u = mod_inverse(u, pm);
        for (long long x = 0; x < p; ++x) pts.insert(GridPoint{x, x * x % p * inv_u % p});
    }
    GridSet set = GridSet::create(pm, std::vector<GridPoint>(pts.begin(), pts.end()));
    if (set.size() != k * p - k + 1)
        throw defect_error("parabola union size != kp-k+1: parabolas intersected off the origin");

    ParabolaCertificate cert;
    cert.p = p;
    cert.k = k;
    cert.n_star = prof.n_star;
    cert.u_first = prof.n_star + 1;
    cert.u_last = prof.n_star + k;
    cert.size = set.size();
    cert.capacity = prop1_capacity(k);
    cert.refinement_holds = prof.refinement_holds();
    return {std::move(set), cert};
}

std::pair<CyclicSet, ProjectionCertificate> project_to_cyclic(const GridSet& a, long long s) {
    if (s < 1) throw precondition_error("project_to_cyclic requires s >= 1");
    long long p = a.p;
    long long modulus = p * p * s;
    std::vector<long long> elems;
    elems.reserve(static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(s));
    for (const auto& pt : a.elements)
        for (long long c = 0; c < s; ++c) elems.push_back(pt.x + c * p + pt.y * s * p);
    CyclicSet set = CyclicSet::create(modulus, std::move(elems));
    if (set.size() != a.size() * s) throw defect_error("projection is not injective");

    ProjectionCertificate cert;
    cert.p = p;
    cert.s = s;
    cert.source_size = a.size();
    cert.source_max = max_nonzero_repr_grid(a);
    cert.size = set.size();
    cert.cap = cert.source_max * (s + 1);
    return {std::move(set), cert};
}

std::pair<CyclicSet, CyclicCertificate> construct_cyclic(const PrimeModulus& pm, long long s,
                                                         const Rat& alpha) {
    long long p = pm.value();
    if (s < 1) throw precondition_error("construct_cyclic requires s >= 1");
    if (alpha <= 0 || alpha >= Rat(1, 2))
        throw precondition_error("construct_cyclic requires 0 < alpha < 1/2");
    long long k = to_ll(rat_ceil(alpha * p)) + 1;
    if (2 * k > p)
        throw precondition_error(
            "construct_cyclic: 2*(ceil(p*alpha)+1) = " + std::to_string(2 * k) + " > p = " +
            std::to_string(p) +
            "; p is too small for this alpha (the construction needs p*alpha to be able to grow)");

    auto [grid, pcert] = construct_parabola_union(pm, k);
    auto [set, prcert] = project_to_cyclic(grid, s);
    if (set.size() != (k * p - k + 1) * s) throw defect_error("construct_cyclic: wrong size");
    // guaranteed by k = ceil(p*alpha) + 1; a failure here is a defect, not an input error
    if (Rat(k - 1, p) < alpha) throw defect_error("construct_cyclic: (k-1)/p < alpha");
    if (set.density() < alpha) throw defect_error("construct_cyclic: density below alpha");

    CyclicCertificate cert;
    cert.p = p;
    cert.s = s;
    cert.k = k;
    cert.alpha = alpha;
    cert.modulus = set.modulus;
    cert.size = set.size();
    cert.cap = prop1_capacity(k) * static_cast<unsigned long long>(s + 1);
    cert.parabola = pcert;
    cert.projection = prcert;
    return {std::move(set), std::move(cert)};
}

std::pair<IntegerSet, IntegerCertificate> construct_integer(long long n, const Rat& alpha) {
    if (alpha <= 0 || alpha >= Rat(1, 2))
        throw precondition_error("construct_integer requires 0 < alpha < 1/2");
    if (alpha * n < 1) throw precondition_error("construct_integer requires alpha*N >= 1");

    // P = ceil(N^(2/5)): smallest t with t^5 >= N^2
    long long p_start = 1;
    {
        i128 n2 = (i128)n * n;
        while (true) {
            i128 t5 = 1;
            for (int i = 0; i < 5; ++i) t5 *= p_start;
            if (t5 >= n2) break;
            ++p_start;
        }
    }
    long long p = static_cast<long long>(next_prime_at_least(static_cast<u64>(std::max<long long>(p_start, 3))));
    long long chosen = 0;
    while (static_cast<i128>(p) * p <= n) {
        long long k = to_ll(rat_ceil(alpha * p)) + 1;
        if (2 * k <= p) {
            chosen = p;
            break;
        }
        p = static_cast<long long>(next_prime_at_least(static_cast<u64>(p) + 1));
    }
    if (chosen == 0)
        throw precondition_error(
            "construct_integer: no prime p in [ceil(N^(2/5)), sqrt(N)] satisfies both "
            "2*(ceil(p*alpha)+1) <= p and floor(N/p^2) >= 1; N = " +
            std::to_string(n) + " is too small for alpha = " + format_rational(alpha));

    long long s = n / (chosen * chosen);
    auto [cyc, ccert] = construct_cyclic(PrimeModulus(chosen), s, alpha);

    std::vector<long long> elems;
    elems.reserve(cyc.elements.size());
    for (long long r : cyc.elements) elems.push_back(r == 0 ? cyc.modulus : r);
    IntegerSet set = IntegerSet::create(n, std::move(elems));
    if (Rat(set.size()) < alpha * (ccert.modulus))
        throw defect_error("construct_integer: size below alpha * p^2 s");

    IntegerCertificate cert;
    cert.n = n;
    cert.alpha = alpha;
    cert.p_search_start = p_start;
    cert.cyclic = std::move(ccert);
    return {std::move(set), std::move(cert)};
}

json rational_json(const Rat& q) {
    return json{{"num", rat_num(q).str()}, {"den", rat_den(q).str()}, {"decimal", decimal_string(q)}};
}

json to_json(const ApCertificate& c) {
    return json{{"kind", "ap"},   {"n", c.n},   {"alpha", format_rational(c.alpha)},
                {"a", c.a},       {"l", c.l},   {"size", c.size}};
}

json to_json(const BlockCertificate& c) {
    return json{{"kind", "block"},
                {"n", c.n},
                {"d", c.d},
                {"alpha", format_rational(c.alpha)},
                {"base_pattern", c.base_pattern},
                {"k", c.k},
                {"m", c.m_quot},
                {"part1_size", static_cast<long long>(c.part1.size())},
                {"part2_size", static_cast<long long>(c.part2.size())},
                {"size", c.size},
                {"cap", 2 * c.k}};
}

json to_json(const ParabolaCertificate& c) {
    return json{{"kind", "parabola"}, {"p", c.p},
                {"k", c.k},           {"n_star", c.n_star},
                {"u_first", c.u_first}, {"u_last", c.u_last},
                {"size", c.size},     {"capacity", c.capacity},
                {"refinement_holds", c.refinement_holds}};
}

json to_json(const ProjectionCertificate& c) {
    return json{{"kind", "projection"}, {"p", c.p},     {"s", c.s},
                {"source_size", c.source_size}, {"source_max", c.source_max},
                {"size", c.size},       {"cap", c.cap}};
}

json to_json(const CyclicCertificate& c) {
    return json{{"kind", "cyclic"},
                {"p", c.p},
                {"s", c.s},
                {"k", c.k},
                {"alpha", format_rational(c.alpha)},
                {"modulus", c.modulus},
                {"size", c.size},
                {"cap", c.cap},
                {"parabola", to_json(c.parabola)},
                {"projection", to_json(c.projection)}};
}

json to_json(const IntegerCertificate& c) {
    return json{{"kind", "integer"},
                {"n", c.n},
                {"alpha", format_rational(c.alpha)},
                {"p_search_start", c.p_search_start},
                {"p", c.cyclic.p},
                {"s", c.cyclic.s},
                {"k", c.cyclic.k},
                {"size", c.cyclic.size},
                {"cap", c.cyclic.cap},
                {"cyclic", to_json(c.cyclic)}};
}

} // namespace popdiff
