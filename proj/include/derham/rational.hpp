#pragma once

#include <gmpxx.h>

#include <string>

namespace derham {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

/// Canonical decimal-free rendering: "p" or "p/q" with q > 1.
std::string rat_str(const Rat& q);

/// Fractional part in [0, 1).
Rat rat_mod1(const Rat& q);

/// lcm of two positive integers.
Int int_lcm(const Int& a, const Int& b);

}  // namespace derham
