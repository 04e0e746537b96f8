#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "derham/cyclotomic.hpp"
#include "derham/exponent.hpp"

namespace derham {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero scalar") {}
};

/// Monomial of the scalar tower: a formal phase symbol exp(2 pi i gamma)
/// for an irrational exponent gamma, a power of pi, and powers of the
/// declared constants as real symbols.  Phase symbols are units.
struct Monomial {
    ScalarExponent phase;                   // rational part always zero
    unsigned pi_pow = 0;
    std::map<std::string, unsigned> names;  // no zero entries

    bool is_one() const { return phase.is_zero() && pi_pow == 0 && names.empty(); }
    bool operator==(const Monomial& o) const {
        return pi_pow == o.pi_pow && names == o.names && phase == o.phase;
    }
    bool operator<(const Monomial& o) const;

    /// Product; a rational carry appears when irrational phase parts
    /// cancel to a rational, returned as a root of unity factor.
    static std::pair<Monomial, Cyclotomic> mul(const Monomial& a, const Monomial& b);
};

/// Polynomial over the cyclotomic field in the tower monomials.
class TowerPoly {
public:
    TowerPoly() = default;
    static TowerPoly from_cyclo(const Cyclotomic& c);
    static TowerPoly term(const Monomial& m, const Cyclotomic& c);

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<Monomial, Cyclotomic>& terms() const { return t_; }

    TowerPoly operator+(const TowerPoly& o) const;
    TowerPoly operator-(const TowerPoly& o) const;
    TowerPoly operator-() const;
    TowerPoly operator*(const TowerPoly& o) const;

    bool operator==(const TowerPoly& o) const { return t_ == o.t_; }

    /// Leading (maximal) term in the monomial order.  Pre: !is_zero().
    std::pair<Monomial, Cyclotomic> leading() const { return *t_.rbegin(); }

    TowerPoly conj() const;

    void add_term(const Monomial& m, const Cyclotomic& c);

private:
    std::map<Monomial, Cyclotomic> t_;
};

/// Polynomial gcd in the tower ring (phases handled as lattice units).
TowerPoly tower_gcd(const TowerPoly& a, const TowerPoly& b);
/// Exact division; throws std::logic_error when not divisible.
TowerPoly tower_div_exact(const TowerPoly& a, const TowerPoly& b);

/// Element of the exact coefficient field: a reduced fraction of tower
/// polynomials.  Canonical form: numerator and denominator cleared of
/// common factors, denominator's leading term has coefficient 1 and no
/// phase.  All operations keep values canonical; equality is structural.
class Scalar {
public:
    Scalar() : num_(), den_(TowerPoly::from_cyclo(Cyclotomic::from_int(1))) {}

    static Scalar from_rat(const Rat& q);
    static Scalar from_int(long n) { return from_rat(rat(n)); }
    static Scalar from_cyclotomic(const Cyclotomic& c);
    static Scalar pi(unsigned pow = 1);
    static Scalar imaginary_unit() { return from_cyclotomic(Cyclotomic::imaginary_unit()); }
    static Scalar constant(const std::string& name);
    /// The phase value exp(2 pi i phi); rational phi reduces to a root of unity.
    static Scalar phase(const ScalarExponent& phi);
    /// The real value of an exponent: q + sum q_i c_i + sum q_ij c_i c_j.
    static Scalar exponent_value(const ScalarExponent& e);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const;
    /// Pre: is_rational().
    Rat rat_value() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Throws DivisionByZero when o is zero.
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar conj() const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const TowerPoly& num() const { return num_; }
    const TowerPoly& den() const { return den_; }
    bool has_denominator() const;

    /// Re-runs canonicalization (idempotent on canonical values).
    Scalar renormalized() const;

    /// Interprets the scalar as a phase-group exponent value if it has
    /// that shape (rational + linear + quadratic in constants, no pi,
    /// no phase symbols, rational coefficients).
    std::optional<ScalarExponent> as_exponent() const;

    std::string str() const;

private:
    TowerPoly num_, den_;

    Scalar(TowerPoly n, TowerPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    void normalize();
};

std::string tower_poly_str(const TowerPoly& p);
std::string exponent_str(const ScalarExponent& e);

}  // namespace derham
