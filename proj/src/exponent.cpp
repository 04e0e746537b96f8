#include "derham/exponent.hpp"

#include <algorithm>

namespace derham {

bool ConstantSystem::has(const std::string& n) const {
    return std::find(names.begin(), names.end(), n) != names.end();
}

void ConstantSystem::validate() const {
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw std::invalid_argument("empty constant name");
        if (names[i] == "pi" || names[i] == "i")
            throw std::invalid_argument("reserved constant name: " + names[i]);
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("duplicate constant name: " + names[i]);
    }
}

ScalarExponent ScalarExponent::constant(const std::string& name, const Rat& coeff) {
    ScalarExponent e;
    e.add_linear(name, coeff);
    return e;
}

void ScalarExponent::add_linear(const std::string& name, const Rat& coeff) {
    auto it = linear_.find(name);
    if (it == linear_.end()) {
        if (coeff != 0) linear_.emplace(name, coeff);
    } else {
        it->second += coeff;
        it->second.canonicalize();
        if (it->second == 0) linear_.erase(it);
    }
}

void ScalarExponent::add_quadratic(const std::string& a, const std::string& b, const Rat& coeff) {
    Pair key = a <= b ? Pair{a, b} : Pair{b, a};
    auto it = quadratic_.find(key);
    if (it == quadratic_.end()) {
        if (coeff != 0) quadratic_.emplace(key, coeff);
    } else {
        it->second += coeff;
        it->second.canonicalize();
        if (it->second == 0) quadratic_.erase(it);
    }
}

ScalarExponent ScalarExponent::operator+(const ScalarExponent& o) const {
    ScalarExponent r = *this;
    r.rational_ += o.rational_;
    r.rational_.canonicalize();
    for (const auto& [k, v] : o.linear_) r.add_linear(k, v);
    for (const auto& [k, v] : o.quadratic_) r.add_quadratic(k.first, k.second, v);
    return r;
}

ScalarExponent ScalarExponent::operator-(const ScalarExponent& o) const { return *this + (-o); }

ScalarExponent ScalarExponent::operator-() const { return scaled(rat(-1)); }

ScalarExponent ScalarExponent::scaled(const Rat& f) const {
    ScalarExponent r;
    if (f == 0) return r;
    r.rational_ = rational_ * f;
    r.rational_.canonicalize();
    for (const auto& [k, v] : linear_) { Rat c = v * f; c.canonicalize(); r.linear_.emplace(k, c); }
    for (const auto& [k, v] : quadratic_) { Rat c = v * f; c.canonicalize(); r.quadratic_.emplace(k, c); }
    return r;
}

ScalarExponent ScalarExponent::operator*(const ScalarExponent& o) const {
    if ((has_quadratic() && !o.is_rational()) || (o.has_quadratic() && !is_rational()))
        throw std::domain_error("exponent product exceeds quadratic degree");
    ScalarExponent r = scaled(o.rational_) + o.scaled(rational_);
    r.rational_ = rational_ * o.rational_;
    r.rational_.canonicalize();
    for (const auto& [ka, va] : linear_)
        for (const auto& [kb, vb] : o.linear_) r.add_quadratic(ka, kb, va * vb);
    return r;
}

ScalarExponent ScalarExponent::irrational_part() const {
    ScalarExponent r = *this;
    r.rational_ = 0;
    return r;
}

bool ScalarExponent::operator==(const ScalarExponent& o) const {
    return rational_ == o.rational_ && linear_ == o.linear_ && quadratic_ == o.quadratic_;
}

bool ScalarExponent::operator<(const ScalarExponent& o) const {
    int c = ::cmp(rational_, o.rational_);
    if (c != 0) return c < 0;
    {
        auto a = linear_.begin(), b = o.linear_.begin();
        for (; a != linear_.end() && b != o.linear_.end(); ++a, ++b) {
            if (a->first != b->first) return a->first < b->first;
            int d = ::cmp(a->second, b->second);
            if (d != 0) return d < 0;
        }
        if (a != linear_.end()) return false;
        if (b != o.linear_.end()) return true;
    }
    {
        auto a = quadratic_.begin(), b = o.quadratic_.begin();
        for (; a != quadratic_.end() && b != o.quadratic_.end(); ++a, ++b) {
            if (a->first != b->first) return a->first < b->first;
            int d = ::cmp(a->second, b->second);
            if (d != 0) return d < 0;
        }
        if (a != quadratic_.end()) return false;
        if (b != o.quadratic_.end()) return true;
    }
    return false;
}

}  // namespace derham
