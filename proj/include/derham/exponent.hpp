#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "derham/rational.hpp"

namespace derham {

/// Declared irrational constants.  Equality decisions downstream assume
/// that {1} together with the names and their pairwise products are
/// Q-linearly independent over the reals; the declaration is trusted,
/// never checked numerically.
struct ConstantSystem {
    std::vector<std::string> names;

    bool has(const std::string& n) const;
    /// Throws std::invalid_argument on duplicate/reserved/empty names.
    void validate() const;
};

/// Exponent in the phase group: q + sum q_i c_i + sum q_ij c_i c_j with
/// rational coefficients, constants c_i from a ConstantSystem.  Maps hold
/// no zero entries.
class ScalarExponent {
public:
    using Pair = std::pair<std::string, std::string>;  // first <= second

    ScalarExponent() = default;
    explicit ScalarExponent(const Rat& q) : rational_(q) {}
    static ScalarExponent constant(const std::string& name, const Rat& coeff = Rat(1));

    const Rat& rational_part() const { return rational_; }
    const std::map<std::string, Rat>& linear_part() const { return linear_; }
    const std::map<Pair, Rat>& quadratic_part() const { return quadratic_; }

    bool is_zero() const { return rational_ == 0 && linear_.empty() && quadratic_.empty(); }
    bool is_rational() const { return linear_.empty() && quadratic_.empty(); }
    bool has_quadratic() const { return !quadratic_.empty(); }

    ScalarExponent operator+(const ScalarExponent& o) const;
    ScalarExponent operator-(const ScalarExponent& o) const;
    ScalarExponent operator-() const;
    ScalarExponent scaled(const Rat& f) const;
    /// Product of two exponents; throws std::domain_error if the result
    /// would exceed quadratic degree.
    ScalarExponent operator*(const ScalarExponent& o) const;

    /// The exponent with rational part dropped (phase-symbol content).
    ScalarExponent irrational_part() const;

    bool operator==(const ScalarExponent& o) const;
    bool operator!=(const ScalarExponent& o) const { return !(*this == o); }
    bool operator<(const ScalarExponent& o) const;

    void set_rational(const Rat& q) { rational_ = q; }
    void add_linear(const std::string& name, const Rat& coeff);
    void add_quadratic(const std::string& a, const std::string& b, const Rat& coeff);

private:
    Rat rational_ = Rat(0);
    std::map<std::string, Rat> linear_;
    std::map<Pair, Rat> quadratic_;
};

}  // namespace derham
