#include "popdiff/bounds.hpp"

#include "popdiff/errors.hpp"

namespace popdiff {

using nlohmann::json;

namespace {

void check_common(long long n, long long d, const Rat& alpha) {
    if (d < 2 || d > n) throw precondition_error("bounds require 2 <= D <= N");
    if (alpha <= 0 || alpha >= 1) throw precondition_error("bounds require 0 < alpha < 1");
}

} // namespace

Rat lb_inclusion_exclusion(long long n, long long d, const Rat& alpha) {
    check_common(n, d, alpha);
    return Rat(2) * (alpha * d - 1) / Rat(d * (d - 1)) * n - Rat(2, d);
}

Rat lb_fourier(long long n, long long d, const Rat& alpha) {
    check_common(n, d, alpha);
    return alpha * alpha * n * n / Rat(n + d) - (alpha * n + 1) / Rat(d);
}

Rat lb_cyclic_counting(long long n, const Rat& alpha) {
    if (n < 2) throw precondition_error("cyclic counting bound requires N >= 2");
    if (alpha <= 0 || alpha > 1) throw precondition_error("need 0 < alpha <= 1");
    return alpha * alpha * n - 1;
}

Rat ub_block(long long n, long long d, const Rat& alpha) {
    std::string why;
    if (!block_hypotheses_hold(n, d, alpha, &why)) throw precondition_error("ub_block: " + why);
    return Rat(2) * (alpha * d - 1) / Rat(d * (d - 1)) * n + 4;
}

BoundsReport make_bounds_report(long long n, long long d, const Rat& alpha, bool cyclic_ambient,
                                std::optional<std::pair<long long, long long>> ps) {
    BoundsReport r;
    r.params = make_regime_params(n, d, alpha);
    r.regime = classify_regime(n, d, alpha);
    r.lb_ie = lb_inclusion_exclusion(n, d, alpha);
    r.lb_fourier_v = lb_fourier(n, d, alpha);
    r.fourier_main_term = alpha * alpha * n * n / Rat(n + d);
    r.fourier_asymptote = alpha * alpha * n;
    if (cyclic_ambient) r.lb_cyclic = lb_cyclic_counting(n, alpha);
    std::string why;
    if (block_hypotheses_hold(n, d, alpha, &why))
        r.ub_block_v = ub_block(n, d, alpha);
    else
        r.ub_block_unavailable_reason = why;
    // special case: 1/alpha integer and D = 1/alpha + 1 gives leading
    // coefficient 2 alpha^3 / (1 + alpha)
    Rat inv = Rat(1) / alpha;
    if (rat_den(inv) == 1 && Rat(d) == inv + 1)
        r.remark_coefficient = Rat(2) * alpha * alpha * alpha / (Rat(1) + alpha);
    if (ps) {
        long long k = to_ll(rat_ceil(alpha * ps->first)) + 1;
        if (2 * k <= ps->first)
            r.cap_parabola_projection = prop1_capacity(k) * static_cast<unsigned long long>(ps->second + 1);
    }
    return r;
}

json to_json(const BoundsReport& r) {
    json j;
    j["n"] = r.params.n;
    j["d"] = r.params.d;
    j["alpha"] = rational_json(r.params.alpha);
    j["gamma"] = rational_json(r.params.gamma);
    j["regime"] = regime_tag_name(r.regime.tag);
    if (r.regime.delta) {
        j["delta"] = rational_json(*r.regime.delta);
        j["hypotheses"] = {{"d_margin_ok", r.regime.d_margin_ok}, {"n_size_ok", r.regime.n_size_ok}};
    }
    auto bound_entry = [](const Rat& q) {
        json e = rational_json(q);
        e["clamped"] = q < 0 ? "0.000000" : decimal_string(q);
        return e;
    };
    j["lb_inclusion_exclusion"] = bound_entry(r.lb_ie);
    j["lb_fourier"] = bound_entry(r.lb_fourier_v);
    j["fourier_main_term"] = rational_json(r.fourier_main_term);
    j["fourier_asymptote"] = rational_json(r.fourier_asymptote);
    if (r.lb_cyclic) j["lb_cyclic_counting"] = bound_entry(*r.lb_cyclic);
    if (r.ub_block_v)
        j["ub_block"] = rational_json(*r.ub_block_v);
    else
        j["ub_block_unavailable"] = r.ub_block_unavailable_reason;
    if (r.remark_coefficient) j["critical_window_coefficient"] = rational_json(*r.remark_coefficient);
    if (r.cap_parabola_projection) j["cap_parabola_projection"] = *r.cap_parabola_projection;
    return j;
}

} // namespace popdiff
