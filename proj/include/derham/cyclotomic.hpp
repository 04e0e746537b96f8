#pragma once

#include <vector>

#include "derham/rational.hpp"

namespace derham {

/// Element of the cyclotomic field Q(zeta_N), stored as a polynomial in
/// zeta_N reduced modulo the N-th cyclotomic polynomial and then pushed
/// down to the minimal order (conductor) that contains the value.  The
/// order grows lazily: arithmetic between different orders lifts both
/// operands to the lcm first.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_(1, Rat(0)) {}

    static Cyclotomic from_rat(const Rat& q);
    static Cyclotomic from_int(long n) { return from_rat(rat(n)); }
    /// e^{2 pi i q}; only the fractional part of q matters.
    static Cyclotomic root_of_unity(const Rat& q);
    static Cyclotomic imaginary_unit() { return root_of_unity(rat(1, 4)); }

    bool is_zero() const;
    bool is_rational() const { return order_ == 1; }
    /// Pre: is_rational().
    const Rat& rat_value() const { return c_[0]; }

    unsigned order() const { return order_; }
    /// Coefficient of zeta_order^k in the reduced representation.
    const std::vector<Rat>& coords() const { return c_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    /// Pre: !is_zero().
    Cyclotomic inverse() const;
    Cyclotomic conj() const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Deterministic total order (for canonical sorting only, no
    /// numerical meaning).
    int cmp(const Cyclotomic& o) const;

private:
    unsigned order_;       // conductor-canonical after normalize()
    std::vector<Rat> c_;   // size = phi(order_), reduced mod Phi_order

    Cyclotomic(unsigned order, std::vector<Rat> c) : order_(order), c_(std::move(c)) {}

    Cyclotomic lifted(unsigned target_order) const;
    void normalize();

    friend struct CycloOps;
};

/// Cyclotomic polynomial Phi_N as integer coefficient vector (degree phi(N)).
const std::vector<Int>& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

}  // namespace derham
