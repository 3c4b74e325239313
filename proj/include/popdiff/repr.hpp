#pragma once

#include "popdiff/sets.hpp"

#include <iosfwd>
#include <vector>

namespace popdiff {

enum class Engine { fast, naive };

struct WindowSpec {
    enum Kind { integer_window, cyclic_full, cyclic_window, grid_full } kind;
    long long d = 0; // window bound for integer_window ([1, d)) and cyclic_window ([1, d])
};

// Batch representation counts over a window, plus the max over nonzero
// differences in the window.
struct ReprTable {
    WindowSpec window{WindowSpec::integer_window, 0};
    long long ambient_param = 0; // N, M, or p
    std::vector<long long> counts;
    long long m_max = 0;

    // rows "d,count" with d=0 rows omitted; grid cells are encoded d = a*p + b
    void write_csv(std::ostream& out) const;
};

// r_{A-A}(d) for a single d (any integer; r(-d) = r(d), r(0) = |A|).
long long repr_integer(const IntegerSet& a, long long d);
// r over Z/MZ at residue d in [0, M).
long long repr_cyclic(const CyclicSet& a, long long d);
// r over the p x p grid at (da, db) reduced mod p.
long long repr_grid(const GridSet& a, long long da, long long db);

// max of r over 1 <= d < hi(exclusive); the M_D convention is hi = D.
long long m_over_window(const IntegerSet& a, long long hi, Engine engine = Engine::fast);
// M_D(A): requires D >= 2.
long long m_d(const IntegerSet& a, long long d_limit, Engine engine = Engine::fast);

ReprTable repr_table(const AnySet& a, const WindowSpec& window, Engine engine = Engine::fast);

// max over nonzero residues / nonzero grid differences of the full table
long long max_nonzero_repr_cyclic(const CyclicSet& a, Engine engine = Engine::fast);
long long max_nonzero_repr_grid(const GridSet& a, Engine engine = Engine::fast);

// E = sum_x r_{A-A}(x) * r_{I-I}(x) over Z/MZ with I = {1, ..., D}.
// Requires D >= 1 and D < modulus. Satisfies E * M >= |A|^2 D^2.
long long fourier_energy(const CyclicSet& a, long long d_len);

} // namespace popdiff
