#include "popdiff/repr.hpp"

#include "popdiff/bitvec.hpp"
#include "popdiff/errors.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace popdiff {

namespace {

BitVec indicator_integer(const IntegerSet& a) {
    BitVec b(static_cast<std::size_t>(a.ambient));
    for (long long e : a.elements) b.set(static_cast<std::size_t>(e - 1));
    return b;
}

// indicator of A doubled to 2M bits, so cyclic rotation becomes a plain shift
BitVec indicator_cyclic_doubled(const CyclicSet& a) {
    BitVec b(2 * static_cast<std::size_t>(a.modulus));
    for (long long e : a.elements) {
        b.set(static_cast<std::size_t>(e));
        b.set(static_cast<std::size_t>(e + a.modulus));
    }
    return b;
}

BitVec indicator_cyclic(const CyclicSet& a) {
    BitVec b(static_cast<std::size_t>(a.modulus));
    for (long long e : a.elements) b.set(static_cast<std::size_t>(e));
    return b;
}

std::vector<long long> table_integer_fast(const IntegerSet& a, long long hi) {
    BitVec b = indicator_integer(a);
    std::vector<long long> counts(static_cast<std::size_t>(std::max<long long>(hi - 1, 0)), 0);
    for (long long d = 1; d < hi; ++d)
        counts[static_cast<std::size_t>(d - 1)] =
            BitVec::shifted_and_count(b, b, static_cast<std::size_t>(d));
    return counts;
}

std::vector<long long> table_integer_naive(const IntegerSet& a, long long hi) {
    std::vector<long long> counts(static_cast<std::size_t>(std::max<long long>(hi - 1, 0)), 0);
    const auto& e = a.elements;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            long long d = e[i] - e[j];
            if (d < hi) ++counts[static_cast<std::size_t>(d - 1)];
        }
    return counts;
}

std::vector<long long> table_cyclic_fast(const CyclicSet& a, long long lo, long long hi) {
    BitVec b = indicator_cyclic(a);
    BitVec bb = indicator_cyclic_doubled(a);
    std::vector<long long> counts(static_cast<std::size_t>(hi - lo), 0);
    for (long long d = lo; d < hi; ++d)
        counts[static_cast<std::size_t>(d - lo)] =
            BitVec::shifted_and_count(b, bb, static_cast<std::size_t>(d));
    return counts;
}

std::vector<long long> table_cyclic_naive(const CyclicSet& a, long long lo, long long hi) {
    std::vector<long long> full(static_cast<std::size_t>(a.modulus), 0);
    const auto& e = a.elements;
    for (long long x : e)
        for (long long y : e) ++full[static_cast<std::size_t>(((x - y) % a.modulus + a.modulus) % a.modulus)];
    std::vector<long long> counts(static_cast<std::size_t>(hi - lo), 0);
    for (long long d = lo; d < hi; ++d) counts[static_cast<std::size_t>(d - lo)] = full[static_cast<std::size_t>(d)];
    return counts;
}

std::vector<long long> table_grid_fast(const GridSet& a) {
    long long p = a.p;
    std::vector<BitVec> rows(static_cast<std::size_t>(p), BitVec(static_cast<std::size_t>(p)));
    std::vector<BitVec> rows2(static_cast<std::size_t>(p), BitVec(2 * static_cast<std::size_t>(p)));
    for (const auto& pt : a.elements) {
        rows[static_cast<std::size_t>(pt.x)].set(static_cast<std::size_t>(pt.y));
        rows2[static_cast<std::size_t>(pt.x)].set(static_cast<std::size_t>(pt.y));
        rows2[static_cast<std::size_t>(pt.x)].set(static_cast<std::size_t>(pt.y + p));
    }
    std::vector<long long> counts(static_cast<std::size_t>(p * p), 0);
    for (long long da = 0; da < p; ++da)
        for (long long db = 0; db < p; ++db) {
            long long c = 0;
            for (long long x = 0; x < p; ++x)
                c += BitVec::shifted_and_count(rows[static_cast<std::size_t>(x)],
                                               rows2[static_cast<std::size_t>((x + da) % p)],
                                               static_cast<std::size_t>(db));
            counts[static_cast<std::size_t>(da * p + db)] = c;
        }
    return counts;
}

std::vector<long long> table_grid_naive(const GridSet& a) {
    long long p = a.p;
    std::vector<long long> counts(static_cast<std::size_t>(p * p), 0);
    for (const auto& u : a.elements)
        for (const auto& v : a.elements) {
            long long da = ((u.x - v.x) % p + p) % p;
            long long db = ((u.y - v.y) % p + p) % p;
            ++counts[static_cast<std::size_t>(da * p + db)];
        }
    return counts;
}

} // namespace

long long repr_integer(const IntegerSet& a, long long d) {
    if (d == 0) return a.size();
    long long ad = d < 0 ? -d : d;
    long long count = 0;
    for (long long e : a.elements)
        if (std::binary_search(a.elements.begin(), a.elements.end(), e - ad)) ++count;
    return count;
}

long long repr_cyclic(const CyclicSet& a, long long d) {
    long long m = a.modulus;
    long long r = ((d % m) + m) % m;
    long long count = 0;
    for (long long e : a.elements) {
        long long other = e - r;
        other = ((other % m) + m) % m;
        if (std::binary_search(a.elements.begin(), a.elements.end(), other)) ++count;
    }
    return count;
}

long long repr_grid(const GridSet& a, long long da, long long db) {
    long long p = a.p;
    long long ra = ((da % p) + p) % p, rb = ((db % p) + p) % p;
    long long count = 0;
    for (const auto& pt : a.elements) {
        GridPoint other{((pt.x - ra) % p + p) % p, ((pt.y - rb) % p + p) % p};
        if (std::binary_search(a.elements.begin(), a.elements.end(), other)) ++count;
    }
    return count;
}

long long m_over_window(const IntegerSet& a, long long hi, Engine engine) {
    if (hi > a.ambient + 1) hi = a.ambient + 1; // differences beyond N-1 cannot occur
    auto counts = engine == Engine::fast ? table_integer_fast(a, hi) : table_integer_naive(a, hi);
    long long m = 0;
    for (long long c : counts) m = std::max(m, c);
    return m;
}

long long m_d(const IntegerSet& a, long long d_limit, Engine engine) {
    if (d_limit < 2) throw precondition_error("M_D window requires D >= 2");
    return m_over_window(a, d_limit, engine);
}

ReprTable repr_table(const AnySet& a, const WindowSpec& window, Engine engine) {
    ReprTable t;
    t.window = window;
    switch (window.kind) {
    case WindowSpec::integer_window: {
        const auto* s = std::get_if<IntegerSet>(&a);
        if (!s) throw precondition_error("integer window needs an interval-ambient set");
        if (window.d < 2) throw precondition_error("M_D window requires D >= 2");
        t.ambient_param = s->ambient;
        t.counts = engine == Engine::fast ? table_integer_fast(*s, window.d)
                                          : table_integer_naive(*s, window.d);
        for (long long c : t.counts) t.m_max = std::max(t.m_max, c);
        return t;
    }
    case WindowSpec::cyclic_full: {
        const auto* s = std::get_if<CyclicSet>(&a);
        if (!s) throw precondition_error("cyclic window needs a cyclic-ambient set");
        t.ambient_param = s->modulus;
        t.counts = engine == Engine::fast ? table_cyclic_fast(*s, 0, s->modulus)
                                          : table_cyclic_naive(*s, 0, s->modulus);
        for (std::size_t d = 1; d < t.counts.size(); ++d) t.m_max = std::max(t.m_max, t.counts[d]);
        return t;
    }
    case WindowSpec::cyclic_window: {
        const auto* s = std::get_if<CyclicSet>(&a);
        if (!s) throw precondition_error("cyclic window needs a cyclic-ambient set");
        if (window.d < 1 || window.d >= s->modulus)
            throw precondition_error("cyclic window requires 1 <= D < modulus");
        t.ambient_param = s->modulus;
        // counts for x = 1..D; by symmetry r(M-x) = r(x), so this covers 0 < |x| <= D
        t.counts = engine == Engine::fast ? table_cyclic_fast(*s, 1, window.d + 1)
                                          : table_cyclic_naive(*s, 1, window.d + 1);
        for (long long c : t.counts) t.m_max = std::max(t.m_max, c);
        return t;
    }
    case WindowSpec::grid_full: {
        const auto* s = std::get_if<GridSet>(&a);
        if (!s) throw precondition_error("grid window needs a grid-ambient set");
        t.ambient_param = s->p;
        t.counts = engine == Engine::fast ? table_grid_fast(*s) : table_grid_naive(*s);
        for (std::size_t i = 1; i < t.counts.size(); ++i) t.m_max = std::max(t.m_max, t.counts[i]);
        return t;
    }
    }
    throw defect_error("unreachable window kind");
}

long long max_nonzero_repr_cyclic(const CyclicSet& a, Engine engine) {
    if (a.modulus == 1) return 0;
    return repr_table(AnySet{a}, WindowSpec{WindowSpec::cyclic_full, 0}, engine).m_max;
}

long long max_nonzero_repr_grid(const GridSet& a, Engine engine) {
    return repr_table(AnySet{a}, WindowSpec{WindowSpec::grid_full, 0}, engine).m_max;
}

long long fourier_energy(const CyclicSet& a, long long d_len) {
    long long m = a.modulus;
    if (d_len < 1) throw precondition_error("fourier_energy requires D >= 1");
    if (d_len >= m) throw precondition_error("fourier_energy requires D < modulus");
    std::vector<long long> ra = table_cyclic_fast(a, 0, m);
    std::vector<long long> interval(static_cast<std::size_t>(d_len));
    std::iota(interval.begin(), interval.end(), 1);
    CyclicSet i_set = CyclicSet::create(m, std::move(interval));
    std::vector<long long> ri = table_cyclic_fast(i_set, 0, m);
    long long e = 0;
    for (std::size_t x = 0; x < static_cast<std::size_t>(m); ++x) e += ra[x] * ri[x];
    return e;
}

void ReprTable::write_csv(std::ostream& out) const {
    out << "d,count\n";
    switch (window.kind) {
    case WindowSpec::integer_window:
        for (std::size_t i = 0; i < counts.size(); ++i)
            out << (i + 1) << "," << counts[i] << "\n";
        break;
    case WindowSpec::cyclic_full:
        for (std::size_t d = 1; d < counts.size(); ++d) out << d << "," << counts[d] << "\n";
        break;
    case WindowSpec::cyclic_window:
        for (std::size_t i = 0; i < counts.size(); ++i) out << (i + 1) << "," << counts[i] << "\n";
        break;
    case WindowSpec::grid_full:
        for (std::size_t i = 1; i < counts.size(); ++i) out << i << "," << counts[i] << "\n";
        break;
    }
}

} // namespace popdiff
