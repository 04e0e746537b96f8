#include "derham/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace derham {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> d;
    for (unsigned k = 1; k * k <= n; ++k) {
        if (n % k == 0) {
            d.push_back(k);
            if (k != n / k) d.push_back(n / k);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

// Exact division of integer polynomials, remainder known to be zero.
std::vector<Int> poly_div_exact(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r = a;
    std::vector<Int> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Int(0));
    long db = static_cast<long>(b.size()) - 1;
    for (long i = static_cast<long>(r.size()) - 1; i >= db; --i) {
        if (r[i] == 0) continue;
        Int c = r[i] / b[db];
        q[i - db] = c;
        for (long j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, std::vector<Int>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d | n.
    std::vector<Int> p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;
    for (unsigned d : divisors(n)) {
        if (d == n) continue;
        p = poly_div_exact(p, cyclotomic_polynomial(d));
    }
    return cache.emplace(n, std::move(p)).first->second;
}

namespace {

// Reduce a rational polynomial modulo Phi_n; returns coefficients of size phi(n).
std::vector<Rat> reduce_mod_phi(std::vector<Rat> r, unsigned n) {
    const std::vector<Int>& phi = cyclotomic_polynomial(n);
    const size_t deg = phi.size() - 1;
    for (long i = static_cast<long>(r.size()) - 1; i >= static_cast<long>(deg); --i) {
        if (r[i] == 0) continue;
        Rat c = r[i];  // phi is monic
        for (size_t j = 0; j < phi.size(); ++j) {
            r[i - deg + j] -= c * Rat(phi[j]);
            r[i - deg + j].canonicalize();
        }
    }
    r.resize(deg);
    for (auto& x : r) x.canonicalize();
    return r;
}

// Solve A x = b over Q by Gaussian elimination; A given column-wise.
// Returns empty optional-style flag via bool; x written on success.
bool solve_columns(const std::vector<std::vector<Rat>>& cols, const std::vector<Rat>& b,
                   std::vector<Rat>& x_out) {
    const size_t rows = b.size();
    const size_t ncols = cols.size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(ncols + 1, Rat(0)));
    for (size_t j = 0; j < ncols; ++j)
        for (size_t i = 0; i < rows && i < cols[j].size(); ++i) m[i][j] = cols[j][i];
    for (size_t i = 0; i < rows; ++i) m[i][ncols] = b[i];

    std::vector<long> pivot_of_col(ncols, -1);
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        Rat inv = 1 / m[row][col];
        for (size_t j = col; j <= ncols; ++j) { m[row][j] *= inv; m[row][j].canonicalize(); }
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j <= ncols; ++j) { m[i][j] -= f * m[row][j]; m[i][j].canonicalize(); }
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    // Consistency: zero rows must have zero rhs.
    for (size_t i = row; i < rows; ++i)
        if (m[i][ncols] != 0) return false;
    x_out.assign(ncols, Rat(0));
    for (size_t col = 0; col < ncols; ++col)
        if (pivot_of_col[col] >= 0) x_out[col] = m[pivot_of_col[col]][ncols];
    return true;
}

}  // namespace

Cyclotomic Cyclotomic::from_rat(const Rat& q) {
    return Cyclotomic(1, {q});
}

Cyclotomic Cyclotomic::root_of_unity(const Rat& q) {
    Rat f = rat_mod1(q);
    unsigned n = static_cast<unsigned>(f.get_den().get_ui());
    unsigned p = static_cast<unsigned>(f.get_num().get_ui());
    std::vector<Rat> r(p + 1, Rat(0));
    r[p] = 1;
    Cyclotomic z(n, reduce_mod_phi(std::move(r), n));
    z.normalize();
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::lifted(unsigned target) const {
    if (target == order_) return *this;
    unsigned step = target / order_;
    std::vector<Rat> r(static_cast<size_t>(euler_phi(order_) - 1) * step + 1, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) r[k * step] = c_[k];
    return Cyclotomic(target, reduce_mod_phi(std::move(r), target));
}

void Cyclotomic::normalize() {
    if (is_zero()) { order_ = 1; c_.assign(1, Rat(0)); return; }
    if (order_ == 1) return;
    for (unsigned d : divisors(order_)) {
        if (d == order_) break;
        // Basis of Q(zeta_d) inside Q(zeta_order): zeta_order^{k * order/d}, k < phi(d).
        unsigned step = order_ / d;
        unsigned dim = euler_phi(d);
        std::vector<std::vector<Rat>> cols;
        cols.reserve(dim);
        for (unsigned k = 0; k < dim; ++k) {
            std::vector<Rat> e(static_cast<size_t>(k) * step + 1, Rat(0));
            e[static_cast<size_t>(k) * step] = 1;
            cols.push_back(reduce_mod_phi(std::move(e), order_));
        }
        std::vector<Rat> x;
        if (solve_columns(cols, c_, x)) {
            order_ = d;
            c_ = std::move(x);
            c_.resize(dim);
            return;  // d ascending: first hit is the conductor
        }
    }
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    unsigned n = static_cast<unsigned>(int_lcm(Int(order_), Int(o.order_)).get_ui());
    Cyclotomic a = lifted(n), b = o.lifted(n);
    for (size_t k = 0; k < a.c_.size(); ++k) { a.c_[k] += b.c_[k]; a.c_[k].canonicalize(); }
    a.normalize();
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (is_zero() || o.is_zero()) return Cyclotomic();
    unsigned n = static_cast<unsigned>(int_lcm(Int(order_), Int(o.order_)).get_ui());
    Cyclotomic a = lifted(n), b = o.lifted(n);
    std::vector<Rat> conv(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
            conv[i + j].canonicalize();
        }
    }
    Cyclotomic r(n, reduce_mod_phi(std::move(conv), n));
    r.normalize();
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse of zero");
    if (order_ == 1) return from_rat(1 / c_[0]);
    // Extended Euclid in Q[x]: u * this + v * Phi_n = 1.
    const std::vector<Int>& phi_i = cyclotomic_polynomial(order_);
    std::vector<Rat> r0(phi_i.begin(), phi_i.end());
    std::vector<Rat> r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients on `this`
    auto trim = [](std::vector<Rat>& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
    while (true) {
        trim(r1);
        if (r1.empty()) throw std::logic_error("cyclotomic inverse: gcd not constant");
        if (r1.size() == 1) break;
        // divide r0 by r1
        std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rat(0));
        std::vector<Rat> rem = r0;
        for (long i = static_cast<long>(rem.size()) - 1;
             i >= static_cast<long>(r1.size()) - 1; --i) {
            if (rem[i] == 0) continue;
            Rat c = rem[i] / r1.back();
            c.canonicalize();
            q[i - (r1.size() - 1)] = c;
            for (size_t j = 0; j < r1.size(); ++j) {
                rem[i - (r1.size() - 1) + j] -= c * r1[j];
                rem[i - (r1.size() - 1) + j].canonicalize();
            }
        }
        trim(rem);
        // s_next = s0 - q * s1
        std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) {
                s2[i + j] -= q[i] * s1[j];
                s2[i + j].canonicalize();
            }
        trim(s2);
        r0 = r1; r1 = rem; s0 = s1; s1 = s2;
    }
    Rat lead = r1[0];
    std::vector<Rat> inv = s1;
    for (auto& x : inv) { x /= lead; x.canonicalize(); }
    Cyclotomic out(order_, reduce_mod_phi(std::move(inv), order_));
    out.normalize();
    return out;
}

Cyclotomic Cyclotomic::conj() const {
    if (order_ == 1) return *this;
    // zeta -> zeta^{-1}
    std::vector<Rat> r(order_, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        size_t e = (order_ - k) % order_;
        r[e] += c_[k];
        r[e].canonicalize();
    }
    Cyclotomic out(order_, reduce_mod_phi(std::move(r), order_));
    out.normalize();
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return order_ == o.order_ && c_ == o.c_;
}

int Cyclotomic::cmp(const Cyclotomic& o) const {
    if (order_ != o.order_) return order_ < o.order_ ? -1 : 1;
    for (size_t k = 0; k < c_.size(); ++k) {
        int c = ::cmp(c_[k], o.c_[k]);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace derham
