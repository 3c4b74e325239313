#include "popdiff/verify.hpp"

#include "popdiff/bounds.hpp"
#include "popdiff/constructions.hpp"
#include "popdiff/errors.hpp"
#include "popdiff/numtheory.hpp"
#include "popdiff/oracle.hpp"
#include "popdiff/repr.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace popdiff {

namespace {

// mt19937_64 with rejection sampling: byte-identical streams everywhere
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = eng();
        } while (v >= lim);
        return v % n;
    }
};

std::vector<long long> sample_distinct(Rng& rng, long long universe, long long count) {
    std::vector<long long> pool(static_cast<std::size_t>(universe));
    std::iota(pool.begin(), pool.end(), 0);
    for (long long i = 0; i < count; ++i) {
        long long j = i + static_cast<long long>(rng.below(static_cast<std::uint64_t>(universe - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(count));
    return pool;
}

std::vector<long long> odd_primes_upto(long long n) {
    std::vector<long long> out;
    for (long long p = 3; p <= n; p += 2)
        if (is_prime(static_cast<u64>(p))) out.push_back(p);
    return out;
}

struct Ctx {
    const VerifyConfig& cfg;
    VerifyReport& rep;

    long long window_hi(long long d_limit) const {
        return d_limit + (cfg.window_off_by_one ? 1 : 0);
    }

    void add(int crit, std::string point, std::string check, bool pass, std::string measured,
             std::string bound) {
        rep.records.push_back(CheckRecord{crit, std::move(point), std::move(check), pass,
                                          std::move(measured), std::move(bound)});
    }
};

std::string fmt_point(std::initializer_list<std::pair<const char*, long long>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << " ";
        first = false;
        os << k << "=" << v;
    }
    return os.str();
}

// criterion 1: f = 0 exactly whenever D <= floor(1/alpha), with the AP set as witness
void criterion1(Ctx& c) {
    OracleConfig ocfg{20, c.cfg.jobs};
    for (long long n = 2; n <= 16; ++n) {
        for (long long m = 1; 2 * m <= n; ++m) {
            Rat alpha(m, n);
            long long a = n / m; // floor(1/alpha)
            for (long long d = 2; d <= a; ++d) {
                OracleResult r = exact_f(n, d, alpha, ocfg);
                auto [ap, cert] = construct_ap(n, alpha);
                long long mm = m_over_window(ap, c.window_hi(d));
                bool pass = r.f == 0 && ap.size() >= m && mm == 0;
                c.add(1, fmt_point({{"N", n}, {"m", m}, {"D", d}}), "f==0 and AP witnesses it", pass,
                      "f=" + std::to_string(r.f) + " |A|=" + std::to_string(ap.size()) +
                          " M=" + std::to_string(mm),
                      "0");
            }
        }
    }
}

// criterion 2: lower bounds <= exact f <= block construction, exhaustive N <= 14
void criterion2(Ctx& c) {
    OracleConfig ocfg{20, c.cfg.jobs};
    for (long long n = 2; n <= 14; ++n) {
        for (long long d = 2; d <= n; ++d) {
            for (long long m = 1; m <= n; ++m) {
                Rat alpha = m < n ? Rat(m, n) : Rat(2 * n - 1, 2 * n);
                OracleResult r = exact_f(n, d, alpha, ocfg);
                std::string pt = fmt_point({{"N", n}, {"D", d}, {"m", m}});
                Rat ie = lb_inclusion_exclusion(n, d, alpha);
                c.add(2, pt, "lb_inclusion_exclusion <= f", ie <= r.f, std::to_string(r.f),
                      format_rational(ie));
                Rat fo = lb_fourier(n, d, alpha);
                c.add(2, pt, "lb_fourier <= f", fo <= r.f, std::to_string(r.f), format_rational(fo));
                if (block_hypotheses_hold(n, d, alpha)) {
                    auto [blk, cert] = construct_block(n, d, alpha);
                    long long mm = m_over_window(blk, c.window_hi(d));
                    c.add(2, pt, "f <= M_D(block)", r.f <= mm, std::to_string(r.f),
                          std::to_string(mm));
                }
            }
        }
    }
}

// criterion 3: block certificate on a >= 200-point grid with N <= 5000
void criterion3(Ctx& c) {
    const long long ns[] = {800, 1600, 2400, 3200, 4000, 4800, 5000};
    long long points = 0;
    for (long long d = 3; d <= 14; ++d) {
        for (long long g = 1; g <= 4; ++g) { // gamma = g/5
            Rat alpha(5 + g, 5 * d);
            for (long long n : ns) {
                if (!block_hypotheses_hold(n, d, alpha)) continue;
                ++points;
                auto [blk, cert] = construct_block(n, d, alpha);
                std::string pt = fmt_point({{"N", n}, {"D", d}, {"g5", g}});
                bool size_ok = Rat(blk.size()) >= alpha * n;
                long long mm = m_over_window(blk, c.window_hi(d));
                bool m_ok = mm <= 2 * cert.k;
                Rat chain = Rat(2) * (alpha * d - 1) / Rat(d * (d - 1)) * n + 4;
                bool chain_ok = Rat(2 * cert.k) <= chain;
                long long r1 = repr_integer(blk, 1);
                bool r1_ok = r1 == 2 * cert.k - 1;
                c.add(3, pt, "|A| >= alpha*N", size_ok, std::to_string(blk.size()),
                      decimal_string(alpha * n));
                c.add(3, pt, "M_D <= 2k", m_ok, std::to_string(mm), std::to_string(2 * cert.k));
                c.add(3, pt, "2k <= closed form", chain_ok, std::to_string(2 * cert.k),
                      format_rational(chain));
                c.add(3, pt, "r(1) == 2k-1", r1_ok, std::to_string(r1),
                      std::to_string(2 * cert.k - 1));
            }
        }
    }
    c.add(3, "grid", "grid size >= 200", points >= 200, std::to_string(points), "200");
}

// criterion 4, part 1: single parabola, all p <= 31, all u: max nonzero count <= 1
// part 2: matched parabola pairs sum to exactly 2, exhaustive p <= 13
void criterion4(Ctx& c) {
    for (long long p : odd_primes_upto(31)) {
        PrimeModulus pm(p);
        for (long long u = 1; u < p; ++u) {
            long long inv_u = mod_inverse(u, pm);
            std::vector<GridPoint> pts;
            for (long long x = 0; x < p; ++x) pts.push_back(GridPoint{x, x * x % p * inv_u % p});
            GridSet au = GridSet::create(pm, std::move(pts));
            long long mx = exact_max_rep_grid(au);
            c.add(4, fmt_point({{"p", p}, {"u", u}}), "single parabola count <= 1", mx <= 1,
                  std::to_string(mx), "1");
        }
    }
    for (long long p : odd_primes_upto(13)) {
        PrimeModulus pm(p);
        // r tables for every (u, v), direct enumeration over x with y = x - a
        std::vector<std::vector<int>> tab(static_cast<std::size_t>((p - 1) * (p - 1)),
                                          std::vector<int>(static_cast<std::size_t>(p * p), 0));
        for (long long u = 1; u < p; ++u) {
            long long inv_u = mod_inverse(u, pm);
            for (long long v = 1; v < p; ++v) {
                long long inv_v = mod_inverse(v, pm);
                auto& t = tab[static_cast<std::size_t>((u - 1) * (p - 1) + (v - 1))];
                for (long long x = 0; x < p; ++x)
                    for (long long y = 0; y < p; ++y) {
                        long long a = ((x - y) % p + p) % p;
                        long long b = ((x * x % p * inv_u - y * y % p * inv_v) % p + p) % p;
                        ++t[static_cast<std::size_t>(a * p + b)];
                    }
            }
        }
        for (long long l = 1; l < p; ++l) {
            bool all_ok = true;
            long long checked = 0;
            std::string worst;
            for (long long u1 = 1; u1 < p; ++u1) {
                long long v1 = ((u1 - l) % p + p) % p;
                if (v1 == 0) continue;
                for (long long u2 = 1; u2 < p; ++u2) {
                    long long v2 = ((u2 - l) % p + p) % p;
                    if (v2 == 0) continue;
                    if (legendre(u1 * v1 % p * (u2 * v2 % p), pm) != -1) continue;
                    ++checked;
                    const auto& t1 = tab[static_cast<std::size_t>((u1 - 1) * (p - 1) + (v1 - 1))];
                    const auto& t2 = tab[static_cast<std::size_t>((u2 - 1) * (p - 1) + (v2 - 1))];
                    for (long long cell = 1; cell < p * p; ++cell)
                        if (t1[static_cast<std::size_t>(cell)] + t2[static_cast<std::size_t>(cell)] != 2) {
                            all_ok = false;
                            if (worst.empty())
                                worst = "u=" + std::to_string(u1) + ",v=" + std::to_string(v1) +
                                        ",u'=" + std::to_string(u2) + ",v'=" + std::to_string(v2) +
                                        ",cell=" + std::to_string(cell);
                        }
                }
            }
            c.add(4, fmt_point({{"p", p}, {"l", l}}), "matched pair counts sum to 2", all_ok,
                  all_ok ? "all=2 over " + std::to_string(checked) + " pairs" : worst, "2");
        }
    }
}

// criterion 5: sum of S_n within the square-root bound, compared by squaring
void criterion5(Ctx& c) {
    for (long long p : odd_primes_upto(101)) {
        PrimeModulus pm(p);
        for (long long k = 1; k <= std::min<long long>(10, p / 2); ++k) {
            WeilSumProfile prof = weil_sum_profile(pm, k);
            c.add(5, fmt_point({{"p", p}, {"k", k}}), "total within sqrt bound",
                  prof.total_within_bound(), std::to_string(prof.total),
                  "sqrt(2p^2k^2(2k-1)+8p^1.5k^4)");
        }
    }
}

// criterion 6: parabola union size and capacity cap, exhaustive grid scan
void criterion6(Ctx& c) {
    for (long long p : odd_primes_upto(61)) {
        PrimeModulus pm(p);
        for (long long k = 1; 2 * k <= p; ++k) {
            auto [grid, cert] = construct_parabola_union(pm, k);
            long long mx = exact_max_rep_grid(grid);
            bool size_ok = grid.size() == k * p - k + 1;
            bool cap_ok = mx <= static_cast<long long>(cert.capacity);
            std::string pt = fmt_point({{"p", p}, {"k", k}});
            c.add(6, pt, "size == kp-k+1 and max <= capacity", size_ok && cap_ok,
                  "size=" + std::to_string(grid.size()) + " max=" + std::to_string(mx),
                  "size=" + std::to_string(k * p - k + 1) + " cap=" + std::to_string(cert.capacity));
            if (!cert.refinement_holds)
                c.add(6, pt, "S_{n*} < 7k^(7/4) refinement", false, "violated", "required");
        }
    }
}

// criterion 7: projection cap h(s+1) on random grid subsets (faithful to the
// stated bound; see the unit suite for the parts of the lemma that are true)
void criterion7(Ctx& c) {
    Rng rng(c.cfg.seed ^ 0x7777777777ULL);
    int case_no = 0;
    for (long long p : {3, 5, 7, 11, 13}) {
        PrimeModulus pm(p);
        for (long long s = 1; s <= 6; ++s) {
            for (int rep = 0; rep < 4; ++rep) {
                long long size = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(p * p)));
                std::vector<long long> flat = sample_distinct(rng, p * p, size);
                std::vector<GridPoint> pts;
                for (long long f : flat) pts.push_back(GridPoint{f / p, f % p});
                GridSet a = GridSet::create(pm, std::move(pts));
                long long h = exact_max_rep_grid(a);
                auto [proj, cert] = project_to_cyclic(a, s);
                long long mx = max_nonzero_repr_cyclic(proj);
                bool size_ok = proj.size() == a.size() * s;
                bool cap_ok = mx <= h * (s + 1);
                c.add(7,
                      fmt_point({{"case", ++case_no}, {"p", p}, {"s", s}, {"m", a.size()}}),
                      "projected size == m*s and max <= h(s+1)", size_ok && cap_ok,
                      "size=" + std::to_string(proj.size()) + " max=" + std::to_string(mx),
                      "size=" + std::to_string(a.size() * s) +
                          " cap=" + std::to_string(h * (s + 1)));
            }
        }
    }
}

// criterion 8: cyclic construction family, measured vs certificate cap and
// the certificate ratio trend along p
void criterion8(Ctx& c) {
    Rat alpha(1, 5);
    for (long long s : {2, 4, 8}) {
        Rat prev_ratio;
        bool have_prev = false;
        bool monotone = true;
        for (long long p : {11, 23, 47, 97}) {
            auto [set, cert] = construct_cyclic(PrimeModulus(p), s, alpha);
            long long measured = max_nonzero_repr_cyclic(set);
            Rat scale = alpha * alpha * p * p * s;
            Rat measured_ratio = Rat(measured) / scale;
            Rat cert_ratio = Rat(static_cast<long long>(cert.cap)) / scale;
            bool cap_ok = measured <= static_cast<long long>(cert.cap);
            c.add(8, fmt_point({{"p", p}, {"s", s}, {"k", cert.k}}),
                  "measured max <= capacity(k)*(s+1)", cap_ok,
                  "max=" + std::to_string(measured) + " ratio=" + decimal_string(measured_ratio),
                  "cap=" + std::to_string(cert.cap) + " ratio=" + decimal_string(cert_ratio));
            if (have_prev && cert_ratio > prev_ratio) monotone = false;
            prev_ratio = cert_ratio;
            have_prev = true;
        }
        c.add(8, fmt_point({{"s", s}}), "certificate ratio non-increasing in p", monotone,
              monotone ? "non-increasing" : "increased", "non-increasing");
    }
}

// criterion 9: fourier energy >= |A|^2 D^2 / (N+D), exact rational comparison
void criterion9(Ctx& c) {
    Rng rng(c.cfg.seed ^ 0x99999999ULL);
    int failures = 0;
    std::string first_fail;
    for (int i = 0; i < 1000; ++i) {
        long long m = 4 + static_cast<long long>(rng.below(2045)); // modulus N + D in [4, 2048]
        long long d = 2 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(m - 2)));
        long long size = static_cast<long long>(rng.below(static_cast<std::uint64_t>(m + 1)));
        CyclicSet a = CyclicSet::create(m, sample_distinct(rng, m, size));
        long long e = fourier_energy(a, d);
        i128 lhs = (i128)e * m;
        i128 rhs = (i128)a.size() * a.size() * d * d;
        if (lhs < rhs) {
            ++failures;
            if (first_fail.empty())
                first_fail = "M=" + std::to_string(m) + " D=" + std::to_string(d) +
                             " |A|=" + std::to_string(a.size());
        }
    }
    c.add(9, "1000 seeded cyclic sets, modulus <= 2048", "E*(N+D) >= |A|^2 D^2", failures == 0,
          failures == 0 ? "all hold" : std::to_string(failures) + " failures, first: " + first_fail,
          "0 failures");
}

// criterion 10: bit-parallel path equals naive pair counting, all ambients
void criterion10(Ctx& c) {
    Rng rng(c.cfg.seed ^ 0x1010101010ULL);
    std::vector<long long> grid_primes = odd_primes_upto(61);
    int failures = 0;
    std::string first_fail;
    auto tables_equal = [](const ReprTable& a, const ReprTable& b) {
        return a.counts == b.counts && a.m_max == b.m_max;
    };
    for (int i = 0; i < 1000; ++i) {
        int ambient = i % 3;
        bool ok = true;
        std::string pt;
        if (ambient == 0) {
            long long n = 2 + static_cast<long long>(rng.below(4095));
            long long size = rng.below(static_cast<std::uint64_t>(std::min<long long>(n, 400) + 1));
            std::vector<long long> elems = sample_distinct(rng, n, static_cast<long long>(size));
            for (auto& e : elems) ++e;
            IntegerSet a = IntegerSet::create(n, std::move(elems));
            long long d = 2 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(std::min<long long>(n, 256) - 1)));
            WindowSpec w{WindowSpec::integer_window, d};
            ok = tables_equal(repr_table(AnySet{a}, w, Engine::fast),
                              repr_table(AnySet{a}, w, Engine::naive));
            pt = "interval N=" + std::to_string(n) + " D=" + std::to_string(d);
        } else if (ambient == 1) {
            long long m = 2 + static_cast<long long>(rng.below(4095));
            long long size = rng.below(static_cast<std::uint64_t>(std::min<long long>(m, 400) + 1));
            CyclicSet a = CyclicSet::create(m, sample_distinct(rng, m, static_cast<long long>(size)));
            WindowSpec w{WindowSpec::cyclic_full, 0};
            ok = tables_equal(repr_table(AnySet{a}, w, Engine::fast),
                              repr_table(AnySet{a}, w, Engine::naive));
            pt = "cyclic M=" + std::to_string(m);
        } else {
            long long p = grid_primes[rng.below(grid_primes.size())];
            long long size = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(std::min<long long>(p * p, 400))));
            std::vector<long long> flat = sample_distinct(rng, p * p, size);
            std::vector<GridPoint> pts;
            for (long long f : flat) pts.push_back(GridPoint{f / p, f % p});
            GridSet a = GridSet::create(PrimeModulus(p), std::move(pts));
            WindowSpec w{WindowSpec::grid_full, 0};
            ok = tables_equal(repr_table(AnySet{a}, w, Engine::fast),
                              repr_table(AnySet{a}, w, Engine::naive));
            pt = "grid p=" + std::to_string(p);
        }
        if (!ok) {
            ++failures;
            if (first_fail.empty()) first_fail = pt;
        }
    }
    c.add(10, "1000 seeded sets, N <= 4096, all ambients", "fast == naive", failures == 0,
          failures == 0 ? "all equal" : std::to_string(failures) + " mismatches, first: " + first_fail,
          "0 mismatches");
}

// criterion 11: max nonzero cyclic repr >= alpha^2 N - 1 with alpha = |A|/N
void criterion11(Ctx& c) {
    Rng rng(c.cfg.seed ^ 0x1111111111ULL);
    int failures = 0;
    std::string first_fail;
    for (int i = 0; i < 500; ++i) {
        long long m = 2 + static_cast<long long>(rng.below(2047));
        long long size = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(m)));
        CyclicSet a = CyclicSet::create(m, sample_distinct(rng, m, size));
        long long mx = max_nonzero_repr_cyclic(a);
        // mx >= |A|^2/M - 1  <=>  M*(mx + 1) >= |A|^2
        bool ok = m * (mx + 1) >= a.size() * a.size();
        if (!ok) {
            ++failures;
            if (first_fail.empty())
                first_fail = "M=" + std::to_string(m) + " |A|=" + std::to_string(a.size()) +
                             " max=" + std::to_string(mx);
        }
    }
    c.add(11, "500 seeded cyclic sets", "max nonzero r >= alpha^2 N - 1", failures == 0,
          failures == 0 ? "all hold" : std::to_string(failures) + " failures, first: " + first_fail,
          "0 failures");
}

} // namespace

VerifyConfig default_verify_config() {
    VerifyConfig cfg;
    cfg.criteria.resize(static_cast<std::size_t>(criterion_count()));
    std::iota(cfg.criteria.begin(), cfg.criteria.end(), 1);
    return cfg;
}

int criterion_count() { return 11; }

const char* criterion_title(int criterion) {
    switch (criterion) {
    case 1: return "AP construction attains f = 0 whenever D <= floor(1/alpha)";
    case 2: return "lower bounds <= exact f <= block construction (exhaustive sandwich)";
    case 3: return "block certificate: density, M_D <= 2k <= closed form, r(1) = 2k-1";
    case 4: return "parabola pair counts: single parabola <= 1, matched pairs sum to 2";
    case 5: return "character-sum totals within the square-root bound";
    case 6: return "parabola union size and capacity cap (exhaustive grid scan)";
    case 7: return "projection cap h(s+1) on random grid subsets";
    case 8: return "cyclic construction family: measured max vs certificate cap, ratio trend";
    case 9: return "autocorrelation energy lower bound";
    case 10: return "bit-parallel vs naive autocorrelation equivalence";
    case 11: return "cyclic counting bound: max repr >= |A|^2/N - 1";
    }
    return "?";
}

std::size_t VerifyReport::failure_count() const {
    std::size_t n = 0;
    for (const auto& r : records)
        if (!r.pass) ++n;
    return n;
}

std::size_t VerifyReport::failure_count(int criterion) const {
    std::size_t n = 0;
    for (const auto& r : records)
        if (r.criterion == criterion && !r.pass) ++n;
    return n;
}

std::size_t VerifyReport::record_count(int criterion) const {
    std::size_t n = 0;
    for (const auto& r : records)
        if (r.criterion == criterion) ++n;
    return n;
}

void VerifyReport::write_csv(std::ostream& out) const {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char ch : s) {
            if (ch == '"') q += "\"\"";
            q += ch;
        }
        q += "\"";
        return q;
    };
    out << "criterion,point,check,pass,measured,bound\n";
    for (const auto& r : records)
        out << r.criterion << "," << quote(r.point) << "," << quote(r.check) << ","
            << (r.pass ? "pass" : "FAIL") << "," << quote(r.measured) << "," << quote(r.bound)
            << "\n";
}

VerifyReport verify_theorem_suite(const VerifyConfig& cfg) {
    VerifyReport rep;
    Ctx ctx{cfg, rep};
    for (int crit : cfg.criteria) {
        switch (crit) {
        case 1: criterion1(ctx); break;
        case 2: criterion2(ctx); break;
        case 3: criterion3(ctx); break;
        case 4: criterion4(ctx); break;
        case 5: criterion5(ctx); break;
        case 6: criterion6(ctx); break;
        case 7: criterion7(ctx); break;
        case 8: criterion8(ctx); break;
        case 9: criterion9(ctx); break;
        case 10: criterion10(ctx); break;
        case 11: criterion11(ctx); break;
        default:
            throw precondition_error("unknown criterion " + std::to_string(crit));
        }
    }
    return rep;
}

} // namespace popdiff
