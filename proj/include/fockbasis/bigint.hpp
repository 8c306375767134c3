#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fockbasis {

// All coefficient arithmetic is exact. Operator matrix entries in this
// theory are integers; rationals are kept so rank computations never have
// to care.
using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructor; long is 64-bit on every platform we
// build for.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

inline std::string to_string(const Int& x) { return x.get_str(); }

// "p/q" without the "/q" when the denominator is 1.
inline std::string to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_str();
}

// Least common multiple of the denominators of a row; used to clear a
// rational matrix row to integers before fraction-free elimination.
inline Int denominator_lcm(const std::vector<Rat>& row) {
    Int l = 1;
    for (const Rat& x : row) {
        Int d = x.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    return l;
}

}  // namespace fockbasis
