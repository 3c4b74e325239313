#pragma once

#include <cstdint>
#include <vector>

namespace popdiff {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Deterministic and exact for all 64-bit inputs.
bool is_prime(u64 n);

// Smallest prime >= x (x >= 2).
u64 next_prime_at_least(u64 x);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

u128 isqrt_u128(u128 x);
// floor(x^(1/4)) via two nested integer square roots
u64 floor_fourth_root(u128 x);

// An odd prime >= 3, certified at construction time.
class PrimeModulus {
public:
    explicit PrimeModulus(long long p);
    long long value() const { return p_; }

private:
    long long p_;
};

// (a/p) in {-1, 0, 1}, Euler's criterion.
int legendre(long long a, const PrimeModulus& p);

// b in [1, p-1] with a*b == 1 mod p; rejects a == 0 mod p.
long long mod_inverse(long long a, const PrimeModulus& p);

// Number of x in Z/pZ with a2 x^2 + a1 x + a0 == 0; requires a2 != 0 mod p.
// Equals 1 + legendre(a1^2 - 4 a2 a0, p).
int quadratic_solution_count(long long a2, long long a1, long long a0, const PrimeModulus& p);

struct WeilSumProfile {
    long long p = 0;
    long long k = 0;
    std::vector<long long> values; // S_0 .. S_{p-1}
    long long n_star = 0;          // least argmin of S_n over {0, ..., p-k-1}
    long long total = 0;           // sum of all S_n

    // total^2 <= 2 p^2 k^2 (2k-1) + 8 p^(3/2) k^4, compared by squaring (exact).
    bool total_within_bound() const;
    // S_{n*}^4 < 7^4 k^7 (exact); the refinement the parabola construction relies on.
    bool refinement_holds() const;
};

// Direct double summation of S_n = sum_{1<=|l|<=k-1} |sum_{i-j=l} ((n+i)(n+j)/p)|.
// Requires 1 <= k and 2k <= p.
WeilSumProfile weil_sum_profile(const PrimeModulus& p, long long k);

// k^2 + floor(7 k^(7/4)), all-integer (exact fourth root, no floating point).
unsigned long long prop1_capacity(long long k);

} // namespace popdiff
