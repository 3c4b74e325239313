#include "popdiff/oracle.hpp"

#include "popdiff/errors.hpp"
#include "popdiff/repr.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <thread>

namespace popdiff {

using nlohmann::json;

namespace {

struct TaskResult {
    long long best = LLONG_MAX;
    std::vector<long long> witness;
    std::uint64_t leaves = 0;
};

// Lexicographic DFS over size-m subsets starting with a fixed first element.
// cnt[d] tracks in-window difference counts of the chosen prefix; prefixes
// whose running max already reaches the incumbent cannot strictly improve.
struct Searcher {
    long long n, d_limit, m;
    std::vector<long long> chosen;
    std::vector<long long> cnt;
    long long partial = 0;
    TaskResult out;

    Searcher(long long n_, long long d_, long long m_) : n(n_), d_limit(d_), m(m_) {
        cnt.assign(static_cast<std::size_t>(d_limit), 0);
        chosen.reserve(static_cast<std::size_t>(m));
    }

    void run(long long first) {
        chosen.push_back(first);
        if (m == 1) {
            leaf();
        } else {
            descend(first);
        }
        chosen.pop_back();
    }

    void leaf() {
        ++out.leaves;
        if (partial < out.best) {
            out.best = partial;
            out.witness = chosen;
        }
    }

    void descend(long long last) {
        long long need = m - static_cast<long long>(chosen.size());
        for (long long e = last + 1; e + need - 1 <= n; ++e) {
            long long saved = partial;
            for (long long s : chosen) {
                long long d = e - s;
                if (d < d_limit && ++cnt[static_cast<std::size_t>(d)] > partial)
                    partial = cnt[static_cast<std::size_t>(d)];
            }
            if (partial < out.best) {
                chosen.push_back(e);
                if (static_cast<long long>(chosen.size()) == m)
                    leaf();
                else
                    descend(e);
                chosen.pop_back();
            }
            for (long long s : chosen) {
                long long d = e - s;
                if (d < d_limit) --cnt[static_cast<std::size_t>(d)];
            }
            partial = saved;
        }
    }
};

TaskResult run_task(long long n, long long d_limit, long long m, long long first) {
    Searcher s(n, d_limit, m);
    s.run(first);
    return std::move(s.out);
}

} // namespace

OracleResult exact_f(long long n, long long d, const Rat& alpha, const OracleConfig& cfg) {
    if (n < 1) throw precondition_error("exact_f requires N >= 1");
    if (n > cfg.n_cap)
        throw cap_exceeded_error("exact_f: N = " + std::to_string(n) + " exceeds the oracle cap " +
                                 std::to_string(cfg.n_cap));
    if (d < 2 || d > n) throw precondition_error("exact_f requires 2 <= D <= N");
    if (alpha <= 0 || alpha >= 1) throw precondition_error("exact_f requires 0 < alpha < 1");

    OracleResult res;
    res.n = n;
    res.d = d;
    res.alpha = alpha;
    res.m = to_ll(rat_ceil(alpha * n));
    if (res.m < 1 || res.m > n) throw defect_error("ceil(alpha*N) outside [1, N]");

    long long first_max = n - res.m + 1;
    std::vector<TaskResult> tasks(static_cast<std::size_t>(first_max));
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (long long f = 1; f <= first_max; ++f)
            tasks[static_cast<std::size_t>(f - 1)] = run_task(n, d, res.m, f);
    } else {
        std::atomic<long long> next{1};
        auto worker = [&] {
            while (true) {
                long long f = next.fetch_add(1);
                if (f > first_max) return;
                tasks[static_cast<std::size_t>(f - 1)] = run_task(n, d, res.m, f);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    res.f = LLONG_MAX;
    for (const auto& t : tasks) {
        res.subsets_examined += t.leaves;
        if (t.best < res.f) { // first task attaining the min owns the witness
            res.f = t.best;
            res.witness = t.witness;
        }
    }
    if (res.f == LLONG_MAX) throw defect_error("exact_f searched an empty space");
    return res;
}

long long exact_max_rep_grid(const GridSet& a) {
    if (a.p > 61)
        throw cap_exceeded_error("exact_max_rep_grid: p = " + std::to_string(a.p) +
                                 " exceeds the cap 61");
    long long p = a.p;
    std::vector<long long> tally(static_cast<std::size_t>(p * p), 0);
    for (const auto& u : a.elements)
        for (const auto& v : a.elements) {
            long long da = ((u.x - v.x) % p + p) % p;
            long long db = ((u.y - v.y) % p + p) % p;
            ++tally[static_cast<std::size_t>(da * p + db)];
        }
    long long best = 0;
    for (std::size_t i = 1; i < tally.size(); ++i) best = std::max(best, tally[i]);
    return best;
}

json to_json(const OracleResult& r) {
    return json{{"n", r.n},
                {"d", r.d},
                {"alpha", format_rational(r.alpha)},
                {"m", r.m},
                {"f", r.f},
                {"witness", r.witness},
                {"subsets_examined", r.subsets_examined}};
}

} // namespace popdiff
