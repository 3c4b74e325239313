#pragma once

#include "popdiff/numtheory.hpp"
#include "popdiff/rational.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace popdiff {

// Subset of [1, N], stored strictly increasing.
struct IntegerSet {
    long long ambient = 0; // N
    std::vector<long long> elements;

    static IntegerSet create(long long n, std::vector<long long> elems);
    long long size() const { return static_cast<long long>(elements.size()); }
    Rat density() const { return Rat(size(), ambient); }
};

// Subset of Z/MZ, residues in [0, M-1], sorted.
struct CyclicSet {
    long long modulus = 0; // M
    std::vector<long long> elements;

    // reduces inputs mod M; duplicates after reduction are rejected
    static CyclicSet create(long long m, std::vector<long long> elems);
    long long size() const { return static_cast<long long>(elements.size()); }
    Rat density() const { return Rat(size(), modulus); }
};

struct GridPoint {
    long long x = 0;
    long long y = 0;
    auto operator<=>(const GridPoint&) const = default;
};

// Subset of Z/pZ x Z/pZ for an odd prime p, coordinates in [0, p-1], sorted.
struct GridSet {
    long long p = 0;
    std::vector<GridPoint> elements;

    static GridSet create(const PrimeModulus& p, std::vector<GridPoint> elems);
    long long size() const { return static_cast<long long>(elements.size()); }
};

using AnySet = std::variant<IntegerSet, CyclicSet, GridSet>;

// Shared set file format:
//   {"ambient":{"interval":N},"elements":[...]}
//   {"ambient":{"cyclic":M},"elements":[...]}
//   {"ambient":{"grid":p},"elements":[[x,y],...]}
AnySet load_set(std::istream& in, const std::string& origin = "<stream>");
AnySet load_set_file(const std::string& path);
void save_set(const AnySet& s, std::ostream& out);
void save_set_file(const AnySet& s, const std::string& path);

long long set_size(const AnySet& s);

// Difference window convention used everywhere: d ranges over [lo, hi).
// M_D windows are difference_window(D) = [1, D); this is the single place
// the convention lives.
struct Window {
    long long lo = 1;
    long long hi = 2; // exclusive
    bool contains(long long d) const { return lo <= d && d < hi; }
};

inline Window difference_window(long long d_limit) { return Window{1, d_limit}; }

} // namespace popdiff
