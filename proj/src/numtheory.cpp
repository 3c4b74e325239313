#include "popdiff/numtheory.hpp"

#include "popdiff/errors.hpp"

#include <algorithm>
#include <string>

namespace popdiff {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

namespace {

bool miller_rabin_composite(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // base set proven complete for n < 3.3e24, so exact for all 64-bit inputs
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (miller_rabin_composite(n, a, d, s)) return false;
    return true;
}

u64 next_prime_at_least(u64 x) {
    if (x <= 2) return 2;
    u64 n = x | 1; // first odd >= x
    while (!is_prime(n)) n += 2;
    return n;
}

u128 isqrt_u128(u128 x) {
    if (x < 2) return x;
    u128 res = 0;
    u128 bit = (u128)1 << 126;
    while (bit > x) bit >>= 2;
    while (bit) {
        if (x >= res + bit) {
            x -= res + bit;
            res = (res >> 1) + bit;
        } else {
            res >>= 1;
        }
        bit >>= 2;
    }
    return res;
}

u64 floor_fourth_root(u128 x) { return static_cast<u64>(isqrt_u128(isqrt_u128(x))); }

PrimeModulus::PrimeModulus(long long p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<u64>(p)))
        throw precondition_error("modulus " + std::to_string(p) + " is not an odd prime >= 3");
}

int legendre(long long a, const PrimeModulus& pm) {
    long long p = pm.value();
    long long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    u64 e = powmod(static_cast<u64>(r), static_cast<u64>((p - 1) / 2), static_cast<u64>(p));
    if (e == 1) return 1;
    if (e == static_cast<u64>(p - 1)) return -1;
    throw defect_error("Euler criterion returned a value other than +-1 for a unit");
}

long long mod_inverse(long long a, const PrimeModulus& pm) {
    long long p = pm.value();
    long long r = ((a % p) + p) % p;
    if (r == 0)
        throw precondition_error("no inverse: " + std::to_string(a) + " == 0 mod " + std::to_string(p));
    // extended Euclid on (r, p)
    long long t = 0, new_t = 1, q = p, new_q = r;
    while (new_q != 0) {
        long long quot = q / new_q;
        long long tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = q - quot * new_q;
        q = new_q;
        new_q = tmp;
    }
    long long inv = ((t % p) + p) % p;
    if (mulmod(static_cast<u64>(inv), static_cast<u64>(r), static_cast<u64>(p)) != 1)
        throw defect_error("mod_inverse verification failed");
    return inv;
}

int quadratic_solution_count(long long a2, long long a1, long long a0, const PrimeModulus& pm) {
    long long p = pm.value();
    long long c2 = ((a2 % p) + p) % p;
    if (c2 == 0)
        throw precondition_error("leading coefficient == 0 mod p: not a quadratic equation");
    long long c1 = ((a1 % p) + p) % p, c0 = ((a0 % p) + p) % p;
    long long disc = (c1 * c1 % p - 4 * (c2 * c0 % p) % p + 4 * p) % p;
    return 1 + legendre(disc, pm);
}

WeilSumProfile weil_sum_profile(const PrimeModulus& pm, long long k) {
    long long p = pm.value();
    if (k < 1) throw precondition_error("weil_sum_profile requires k >= 1");
    if (2 * k > p)
        throw precondition_error("weil_sum_profile requires p >= 2k (p=" + std::to_string(p) +
                                 ", k=" + std::to_string(k) + ")");
    WeilSumProfile prof;
    prof.p = p;
    prof.k = k;
    prof.values.assign(static_cast<std::size_t>(p), 0);
    for (long long n = 0; n < p; ++n) {
        long long s = 0;
        for (long long l = -(k - 1); l <= k - 1; ++l) {
            if (l == 0) continue;
            long long inner = 0;
            for (long long i = 1; i <= k; ++i) {
                long long j = i - l;
                if (j < 1 || j > k) continue;
                inner += legendre((n + i) % p * ((n + j) % p), pm);
            }
            s += std::abs(inner);
        }
        prof.values[static_cast<std::size_t>(n)] = s;
        prof.total += s;
    }
    long long best = prof.values[0];
    prof.n_star = 0;
    for (long long n = 1; n <= p - k - 1; ++n) {
        if (prof.values[static_cast<std::size_t>(n)] < best) {
            best = prof.values[static_cast<std::size_t>(n)];
            prof.n_star = n;
        }
    }
    return prof;
}

bool WeilSumProfile::total_within_bound() const {
    // total^2 <= 2 p^2 k^2 (2k-1) + 8 p^(3/2) k^4
    // <=> L := total^2 - 2 p^2 k^2 (2k-1) <= 8 k^4 p sqrt(p)
    // <=> L <= 0, or L^2 <= 64 k^8 p^3
    i128 lhs = (i128)total * total;
    i128 main = (i128)2 * p * p * k * k * (2 * k - 1);
    i128 l = lhs - main;
    if (l <= 0) return true;
    i128 k4 = (i128)k * k * k * k;
    i128 rhs = 64 * k4 * k4 * ((i128)p * p * p);
    return l * l <= rhs;
}

bool WeilSumProfile::refinement_holds() const {
    // S_{n*} < 7 k^(7/4)  <=>  S_{n*}^4 < 2401 k^7
    i128 s = values[static_cast<std::size_t>(n_star)];
    i128 s2 = s * s;
    i128 k7 = 1;
    for (int i = 0; i < 7; ++i) k7 *= k;
    return s2 * s2 < 2401 * k7;
}

unsigned long long prop1_capacity(long long k) {
    if (k < 1) throw precondition_error("prop1_capacity requires k >= 1");
    if (k > 100000) throw cap_exceeded_error("prop1_capacity: k too large for 128-bit arithmetic");
    u128 k7 = 1;
    for (int i = 0; i < 7; ++i) k7 *= static_cast<u128>(k);
    u64 v = floor_fourth_root((u128)2401 * k7);
    return static_cast<unsigned long long>(k) * k + v;
}

} // namespace popdiff
