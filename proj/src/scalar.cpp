#include "derham/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace derham {

// ---------------------------------------------------------------------------
// Monomial

bool Monomial::operator<(const Monomial& o) const {
    if (pi_pow != o.pi_pow) return pi_pow < o.pi_pow;
    if (names != o.names) return names < o.names;
    return phase < o.phase;
}

std::pair<Monomial, Cyclotomic> Monomial::mul(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.pi_pow = a.pi_pow + b.pi_pow;
    m.names = a.names;
    for (const auto& [n, p] : b.names) m.names[n] += p;
    ScalarExponent ph = a.phase + b.phase;
    Cyclotomic carry = Cyclotomic::from_int(1);
    if (ph.rational_part() != 0) {
        carry = Cyclotomic::root_of_unity(ph.rational_part());
        ph = ph.irrational_part();
    }
    m.phase = ph;
    return {std::move(m), std::move(carry)};
}

// ---------------------------------------------------------------------------
// TowerPoly

TowerPoly TowerPoly::from_cyclo(const Cyclotomic& c) {
    TowerPoly p;
    p.add_term(Monomial{}, c);
    return p;
}

TowerPoly TowerPoly::term(const Monomial& m, const Cyclotomic& c) {
    TowerPoly p;
    p.add_term(m, c);
    return p;
}

void TowerPoly::add_term(const Monomial& m, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

TowerPoly TowerPoly::operator+(const TowerPoly& o) const {
    TowerPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

TowerPoly TowerPoly::operator-(const TowerPoly& o) const { return *this + (-o); }

TowerPoly TowerPoly::operator-() const {
    TowerPoly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

TowerPoly TowerPoly::operator*(const TowerPoly& o) const {
    TowerPoly r;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) {
            auto [m, carry] = Monomial::mul(ma, mb);
            r.add_term(m, ca * cb * carry);
        }
    return r;
}

TowerPoly TowerPoly::conj() const {
    TowerPoly r;
    for (const auto& [m, c] : t_) {
        Monomial cm = m;
        cm.phase = -m.phase;
        r.add_term(cm, c.conj());
    }
    return r;
}

// ---------------------------------------------------------------------------
// Multivariate gcd over the tower ring.
//
// Variables: pi, the constant names, and a lattice basis for the phase
// subgroup generated by the exponents present.  Phases are units, so the
// lattice coordinates may be negative (Laurent); they are shifted to N
// before running the primitive PRS.

namespace {

using Expo = std::vector<long>;
using MPoly = std::map<Expo, Cyclotomic>;

struct VarTable {
    std::vector<std::string> names;                 // sorted constant names
    std::vector<ScalarExponent> lattice;            // basis exponents (zero rational part)
    std::map<ScalarExponent, Expo> phase_coords;    // lattice coordinates per phase
    size_t nvars() const { return 1 + names.size() + lattice.size(); }
};

// Integer row echelon (Hermite-style) over Z; rows span the same lattice.
std::vector<std::vector<Int>> int_row_basis(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) return rows;
    const size_t d = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < d && r < rows.size(); ++col) {
        while (true) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    cmp(abs(rows[i][col]), abs(rows[best][col])) < 0)
                    best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool others = false;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[r][col];  // truncated division
                if (q != 0)
                    for (size_t j = 0; j < d; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) others = true;
            }
            if (!others) {
                if (rows[r][col] < 0)
                    for (size_t j = 0; j < d; ++j) rows[r][j] = -rows[r][j];
                ++r;
                break;
            }
        }
    }
    rows.resize(r);
    return rows;
}

VarTable build_vartable(const std::vector<const TowerPoly*>& polys) {
    VarTable vt;
    std::vector<ScalarExponent> phases;
    for (const TowerPoly* p : polys)
        for (const auto& [m, c] : p->terms()) {
            for (const auto& [n, e] : m.names)
                if (std::find(vt.names.begin(), vt.names.end(), n) == vt.names.end())
                    vt.names.push_back(n);
            if (!m.phase.is_zero() &&
                std::find(phases.begin(), phases.end(), m.phase) == phases.end())
                phases.push_back(m.phase);
        }
    std::sort(vt.names.begin(), vt.names.end());
    if (phases.empty()) return vt;

    // Coordinate space: linear keys then quadratic keys.
    std::vector<std::string> lin_keys;
    std::vector<ScalarExponent::Pair> quad_keys;
    for (const auto& ph : phases) {
        for (const auto& [k, v] : ph.linear_part())
            if (std::find(lin_keys.begin(), lin_keys.end(), k) == lin_keys.end())
                lin_keys.push_back(k);
        for (const auto& [k, v] : ph.quadratic_part())
            if (std::find(quad_keys.begin(), quad_keys.end(), k) == quad_keys.end())
                quad_keys.push_back(k);
    }
    std::sort(lin_keys.begin(), lin_keys.end());
    std::sort(quad_keys.begin(), quad_keys.end());
    const size_t d = lin_keys.size() + quad_keys.size();

    auto to_qvec = [&](const ScalarExponent& ph) {
        std::vector<Rat> v(d, Rat(0));
        for (size_t i = 0; i < lin_keys.size(); ++i) {
            auto it = ph.linear_part().find(lin_keys[i]);
            if (it != ph.linear_part().end()) v[i] = it->second;
        }
        for (size_t i = 0; i < quad_keys.size(); ++i) {
            auto it = ph.quadratic_part().find(quad_keys[i]);
            if (it != ph.quadratic_part().end()) v[lin_keys.size() + i] = it->second;
        }
        return v;
    };

    Int L(1);
    std::vector<std::vector<Rat>> qvecs;
    for (const auto& ph : phases) {
        qvecs.push_back(to_qvec(ph));
        for (const auto& x : qvecs.back()) L = int_lcm(L, x.get_den());
    }
    std::vector<std::vector<Int>> zvecs;
    for (const auto& qv : qvecs) {
        std::vector<Int> zv(d);
        for (size_t j = 0; j < d; ++j) {
            Rat s = qv[j] * Rat(L);
            s.canonicalize();
            zv[j] = s.get_num();
        }
        zvecs.push_back(std::move(zv));
    }
    auto basis = int_row_basis(zvecs);

    // Basis exponents.
    for (const auto& b : basis) {
        ScalarExponent e;
        for (size_t i = 0; i < lin_keys.size(); ++i) {
            Rat c = Rat(b[i]) / Rat(L);
            c.canonicalize();
            if (c != 0) e.add_linear(lin_keys[i], c);
        }
        for (size_t i = 0; i < quad_keys.size(); ++i) {
            Rat c = Rat(b[lin_keys.size() + i]) / Rat(L);
            c.canonicalize();
            if (c != 0) e.add_quadratic(quad_keys[i].first, quad_keys[i].second, c);
        }
        vt.lattice.push_back(std::move(e));
    }

    // Pivot columns of the echelon basis.
    std::vector<size_t> pivots;
    for (const auto& b : basis) {
        size_t p = 0;
        while (p < d && b[p] == 0) ++p;
        pivots.push_back(p);
    }
    for (size_t k = 0; k < phases.size(); ++k) {
        std::vector<Int> v = zvecs.size() > k ? zvecs[k] : std::vector<Int>();
        // zvecs was moved into int_row_basis input; recompute
        v.assign(d, Int(0));
        for (size_t j = 0; j < d; ++j) {
            Rat s = qvecs[k][j] * Rat(L);
            s.canonicalize();
            v[j] = s.get_num();
        }
        Expo coords(basis.size(), 0);
        for (size_t i = 0; i < basis.size(); ++i) {
            if (v[pivots[i]] == 0) continue;
            Int q = v[pivots[i]] / basis[i][pivots[i]];
            assert(q * basis[i][pivots[i]] == v[pivots[i]]);
            coords[i] = q.get_si();
            for (size_t j = 0; j < d; ++j) v[j] -= q * basis[i][j];
        }
        for (size_t j = 0; j < d; ++j) assert(v[j] == 0);
        vt.phase_coords.emplace(phases[k], std::move(coords));
    }
    return vt;
}

MPoly to_mpoly(const TowerPoly& p, const VarTable& vt) {
    MPoly out;
    for (const auto& [m, c] : p.terms()) {
        Expo e(vt.nvars(), 0);
        e[0] = static_cast<long>(m.pi_pow);
        for (const auto& [n, pw] : m.names) {
            size_t i = std::lower_bound(vt.names.begin(), vt.names.end(), n) - vt.names.begin();
            e[1 + i] = static_cast<long>(pw);
        }
        if (!m.phase.is_zero()) {
            const Expo& pc = vt.phase_coords.at(m.phase);
            for (size_t i = 0; i < pc.size(); ++i) e[1 + vt.names.size() + i] = pc[i];
        }
        out[e] = c;
    }
    return out;
}

TowerPoly from_mpoly(const MPoly& p, const VarTable& vt) {
    TowerPoly out;
    for (const auto& [e, c] : p) {
        Monomial m;
        m.pi_pow = static_cast<unsigned>(e[0]);
        for (size_t i = 0; i < vt.names.size(); ++i)
            if (e[1 + i] != 0) m.names[vt.names[i]] = static_cast<unsigned>(e[1 + i]);
        ScalarExponent ph;
        for (size_t i = 0; i < vt.lattice.size(); ++i) {
            long k = e[1 + vt.names.size() + i];
            if (k != 0) ph = ph + vt.lattice[i].scaled(rat(k));
        }
        m.phase = ph;
        out.add_term(m, c);
    }
    return out;
}

bool mp_is_zero(const MPoly& p) { return p.empty(); }

MPoly mp_neg(const MPoly& p) {
    MPoly r;
    for (const auto& [e, c] : p) r.emplace(e, -c);
    return r;
}

void mp_add_term(MPoly& p, const Expo& e, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = p.find(e);
    if (it == p.end())
        p.emplace(e, c);
    else {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

MPoly mp_add(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b) mp_add_term(r, e, c);
    return r;
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e(ea.size());
            for (size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] + eb[i];
            mp_add_term(r, e, ca * cb);
        }
    return r;
}

MPoly mp_one(size_t nvars) {
    MPoly r;
    r.emplace(Expo(nvars, 0), Cyclotomic::from_int(1));
    return r;
}

bool mp_is_unit_one(const MPoly& p) {
    if (p.size() != 1) return false;
    const auto& [e, c] = *p.begin();
    for (long x : e)
        if (x != 0) return false;
    return c == Cyclotomic::from_int(1);
}

// Exact division (Laurent-safe under lex order).
MPoly mp_div_exact(const MPoly& a, const MPoly& b) {
    if (b.empty()) throw std::logic_error("mp_div_exact by zero");
    MPoly rem = a, q;
    const auto& [eb, cb] = *b.rbegin();
    Cyclotomic cb_inv = cb.inverse();
    while (!rem.empty()) {
        const auto& [ea, ca] = *rem.rbegin();
        Expo e(ea.size());
        for (size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] - eb[i];
        Cyclotomic c = ca * cb_inv;
        mp_add_term(q, e, c);
        // rem -= (e, c) * b
        for (const auto& [e2, c2] : b) {
            Expo es(e.size());
            for (size_t i = 0; i < e.size(); ++i) es[i] = e[i] + e2[i];
            mp_add_term(rem, es, -(c * c2));
        }
    }
    return q;
}

long mp_deg(const MPoly& p, size_t var) {
    long d = 0;
    for (const auto& [e, c] : p) d = std::max(d, e[var]);
    return d;
}

// Coefficient of x_var^k as an MPoly with the var slot zeroed.
MPoly mp_coeff(const MPoly& p, size_t var, long k) {
    MPoly r;
    for (const auto& [e, c] : p)
        if (e[var] == k) {
            Expo e2 = e;
            e2[var] = 0;
            r.emplace(std::move(e2), c);
        }
    return r;
}

MPoly mp_shift_min(const MPoly& p, Expo* shift_out) {
    if (p.empty()) return p;
    const size_t n = p.begin()->first.size();
    Expo mn(n, 0);
    bool first = true;
    for (const auto& [e, c] : p) {
        if (first) { mn = e; first = false; continue; }
        for (size_t i = 0; i < n; ++i) mn[i] = std::min(mn[i], e[i]);
    }
    MPoly r;
    for (const auto& [e, c] : p) {
        Expo e2(n);
        for (size_t i = 0; i < n; ++i) e2[i] = e[i] - mn[i];
        r.emplace(std::move(e2), c);
    }
    if (shift_out) *shift_out = mn;
    return r;
}

MPoly mp_gcd(const MPoly& a, const MPoly& b);

// Content w.r.t. variable `var` (gcd of the x^k coefficients).
MPoly mp_content(const MPoly& p, size_t var) {
    const size_t n = p.empty() ? 0 : p.begin()->first.size();
    MPoly acc;
    for (long k = 0; k <= mp_deg(p, var); ++k) {
        MPoly c = mp_coeff(p, var, k);
        if (c.empty()) continue;
        acc = acc.empty() ? c : mp_gcd(acc, c);
        if (mp_is_unit_one(acc)) break;
    }
    if (acc.empty() && n > 0) acc = mp_one(n);
    return acc;
}

// Pseudo-remainder of f by g in variable var.
MPoly mp_prem(MPoly f, const MPoly& g, size_t var) {
    const long dg = mp_deg(g, var);
    MPoly lcg = mp_coeff(g, var, dg);
    while (!f.empty()) {
        long df = mp_deg(f, var);
        if (df < dg) break;
        MPoly lcf = mp_coeff(f, var, df);
        // f = lcg*f - lcf * x^{df-dg} * g
        MPoly xs;
        Expo sh(f.begin()->first.size(), 0);
        sh[var] = df - dg;
        xs.emplace(sh, Cyclotomic::from_int(1));
        f = mp_add(mp_mul(lcg, f), mp_neg(mp_mul(mp_mul(lcf, xs), g)));
    }
    return f;
}

// Normalize: shift to N exponents and make the lex-leading coefficient 1.
MPoly mp_normalize_unit(MPoly p) {
    if (p.empty()) return p;
    p = mp_shift_min(p, nullptr);
    Cyclotomic lead = p.rbegin()->second;
    if (!(lead == Cyclotomic::from_int(1))) {
        Cyclotomic inv = lead.inverse();
        MPoly r;
        for (const auto& [e, c] : p) r.emplace(e, c * inv);
        p = std::move(r);
    }
    return p;
}

MPoly mp_gcd(const MPoly& a0, const MPoly& b0) {
    if (a0.empty()) return mp_normalize_unit(b0);
    if (b0.empty()) return mp_normalize_unit(a0);
    const size_t n = a0.begin()->first.size();

    Expo sa, sb;
    MPoly a = mp_shift_min(a0, &sa);
    MPoly b = mp_shift_min(b0, &sb);

    // Common non-unit monomial content (pi and names only; phases are units).
    // Variable 0 is pi; the lattice slots trail the names but the VarTable
    // keeps the split, so here we conservatively take min(sa, sb) clamped
    // at zero for every slot: negative shifts can only come from phase
    // coordinates, which must not enter the gcd.
    Expo common(n, 0);
    for (size_t i = 0; i < n; ++i) common[i] = std::max(0L, std::min(sa[i], sb[i]));

    // Find main variable.
    size_t var = n;
    for (size_t i = n; i-- > 0;) {
        if (mp_deg(a, i) > 0 || mp_deg(b, i) > 0) { var = i; break; }
    }
    MPoly g;
    if (var == n) {
        g = mp_one(n);  // both constants
    } else {
        MPoly ca = mp_content(a, var), cb = mp_content(b, var);
        MPoly pa = mp_div_exact(a, ca), pb = mp_div_exact(b, cb);
        if (mp_deg(pa, var) < mp_deg(pb, var)) std::swap(pa, pb);
        while (!pb.empty()) {
            MPoly r = mp_prem(pa, pb, var);
            pa = std::move(pb);
            if (r.empty()) {
                pb.clear();
            } else {
                r = mp_shift_min(r, nullptr);
                MPoly cr = mp_content(r, var);
                pb = mp_div_exact(r, cr);
            }
        }
        pa = mp_shift_min(pa, nullptr);
        MPoly cpa = mp_content(pa, var);
        pa = mp_div_exact(pa, cpa);
        g = mp_mul(mp_gcd(ca, cb), pa);
    }
    if (!std::all_of(common.begin(), common.end(), [](long x) { return x == 0; })) {
        MPoly sh;
        sh.emplace(common, Cyclotomic::from_int(1));
        g = mp_mul(g, sh);
    }
    return mp_normalize_unit(g);
}

}  // namespace

TowerPoly tower_gcd(const TowerPoly& a, const TowerPoly& b) {
    VarTable vt = build_vartable({&a, &b});
    return from_mpoly(mp_gcd(to_mpoly(a, vt), to_mpoly(b, vt)), vt);
}

TowerPoly tower_div_exact(const TowerPoly& a, const TowerPoly& b) {
    if (a.is_zero()) return a;
    VarTable vt = build_vartable({&a, &b});
    return from_mpoly(mp_div_exact(to_mpoly(a, vt), to_mpoly(b, vt)), vt);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::from_rat(const Rat& q) {
    return Scalar(TowerPoly::from_cyclo(Cyclotomic::from_rat(q)),
                  TowerPoly::from_cyclo(Cyclotomic::from_int(1)));
}

Scalar Scalar::from_cyclotomic(const Cyclotomic& c) {
    return Scalar(TowerPoly::from_cyclo(c), TowerPoly::from_cyclo(Cyclotomic::from_int(1)));
}

Scalar Scalar::pi(unsigned pow) {
    Monomial m;
    m.pi_pow = pow;
    return Scalar(TowerPoly::term(m, Cyclotomic::from_int(1)),
                  TowerPoly::from_cyclo(Cyclotomic::from_int(1)));
}

Scalar Scalar::constant(const std::string& name) {
    Monomial m;
    m.names[name] = 1;
    return Scalar(TowerPoly::term(m, Cyclotomic::from_int(1)),
                  TowerPoly::from_cyclo(Cyclotomic::from_int(1)));
}

Scalar Scalar::phase(const ScalarExponent& phi) {
    Cyclotomic root = Cyclotomic::root_of_unity(phi.rational_part());
    Monomial m;
    m.phase = phi.irrational_part();
    return Scalar(TowerPoly::term(m, root), TowerPoly::from_cyclo(Cyclotomic::from_int(1)));
}

Scalar Scalar::exponent_value(const ScalarExponent& e) {
    TowerPoly p = TowerPoly::from_cyclo(Cyclotomic::from_rat(e.rational_part()));
    for (const auto& [n, q] : e.linear_part()) {
        Monomial m;
        m.names[n] = 1;
        p.add_term(m, Cyclotomic::from_rat(q));
    }
    for (const auto& [k, q] : e.quadratic_part()) {
        Monomial m;
        if (k.first == k.second)
            m.names[k.first] = 2;
        else {
            m.names[k.first] = 1;
            m.names[k.second] = 1;
        }
        p.add_term(m, Cyclotomic::from_rat(q));
    }
    return Scalar(std::move(p), TowerPoly::from_cyclo(Cyclotomic::from_int(1)));
}

bool Scalar::is_one() const { return *this == from_int(1); }

bool Scalar::is_rational() const {
    if (num_.is_zero()) return true;
    if (!den_.terms().begin()->first.is_one() || den_.term_count() != 1) return false;
    if (!den_.terms().begin()->second.is_rational()) return false;
    if (num_.term_count() != 1) return false;
    const auto& [m, c] = *num_.terms().begin();
    return m.is_one() && c.is_rational();
}

Rat Scalar::rat_value() const {
    if (num_.is_zero()) return Rat(0);
    Rat n = num_.terms().begin()->second.rat_value();
    Rat d = den_.terms().begin()->second.rat_value();
    Rat r = n / d;
    r.canonicalize();
    return r;
}

bool Scalar::has_denominator() const {
    return !(den_.term_count() == 1 && den_.terms().begin()->first.is_one() &&
             den_.terms().begin()->second == Cyclotomic::from_int(1));
}

void Scalar::normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = TowerPoly::from_cyclo(Cyclotomic::from_int(1));
        return;
    }
    if (den_.term_count() > 1) {
        TowerPoly g = tower_gcd(num_, den_);
        bool trivial = g.term_count() == 1 && g.terms().begin()->first.is_one() &&
                       g.terms().begin()->second == Cyclotomic::from_int(1);
        if (!trivial) {
            num_ = tower_div_exact(num_, g);
            den_ = tower_div_exact(den_, g);
        }
    }
    // Unit-normalize the denominator's leading term: coefficient 1, no phase.
    auto [lm, lc] = den_.leading();
    Monomial unit;
    unit.phase = -lm.phase;
    Cyclotomic inv = lc.inverse();
    TowerPoly u = TowerPoly::term(unit, inv);
    num_ = num_ * u;
    den_ = den_ * u;
    if (den_.term_count() == 1) {
        // Cancel residual common pi/name monomial content.
        Monomial dm = den_.leading().first;
        if (dm.pi_pow > 0 || !dm.names.empty()) {
            unsigned min_pi = dm.pi_pow;
            std::map<std::string, unsigned> min_names = dm.names;
            for (const auto& [m, c] : num_.terms()) {
                min_pi = std::min(min_pi, m.pi_pow);
                for (auto it = min_names.begin(); it != min_names.end();) {
                    auto jt = m.names.find(it->first);
                    unsigned have = jt == m.names.end() ? 0u : jt->second;
                    it->second = std::min(it->second, have);
                    if (it->second == 0)
                        it = min_names.erase(it);
                    else
                        ++it;
                }
            }
            if (min_pi > 0 || !min_names.empty()) {
                TowerPoly new_num, new_den;
                auto strip = [&](const Monomial& m) {
                    Monomial r = m;
                    r.pi_pow -= min_pi;
                    for (const auto& [n, p] : min_names) {
                        if (r.names[n] == p)
                            r.names.erase(n);
                        else
                            r.names[n] -= p;
                    }
                    return r;
                };
                for (const auto& [m, c] : num_.terms()) new_num.add_term(strip(m), c);
                for (const auto& [m, c] : den_.terms()) new_den.add_term(strip(m), c);
                num_ = std::move(new_num);
                den_ = std::move(new_den);
            }
        }
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
}

Scalar Scalar::conj() const { return Scalar(num_.conj(), den_.conj()); }

Scalar Scalar::renormalized() const { return Scalar(num_, den_); }

std::optional<ScalarExponent> Scalar::as_exponent() const {
    if (has_denominator()) return std::nullopt;
    ScalarExponent e;
    for (const auto& [m, c] : num_.terms()) {
        if (m.pi_pow != 0 || !m.phase.is_zero()) return std::nullopt;
        if (!c.is_rational()) return std::nullopt;
        Rat q = c.rat_value();
        unsigned total = 0;
        for (const auto& [n, p] : m.names) total += p;
        if (total == 0) {
            e.set_rational(e.rational_part() + q);
        } else if (total == 1) {
            e.add_linear(m.names.begin()->first, q);
        } else if (total == 2) {
            if (m.names.size() == 1)
                e.add_quadratic(m.names.begin()->first, m.names.begin()->first, q);
            else
                e.add_quadratic(m.names.begin()->first, std::next(m.names.begin())->first, q);
        } else {
            return std::nullopt;
        }
    }
    return e;
}

// ---------------------------------------------------------------------------
// Printing

std::string exponent_str(const ScalarExponent& e) {
    std::vector<std::pair<bool, std::string>> pieces;  // (negative, body)
    auto push_rat = [&](const Rat& q, const std::string& suffix) {
        if (q == 0) return;
        Rat a = abs(q);
        std::string body;
        if (a == 1 && !suffix.empty())
            body = suffix;
        else
            body = rat_str(a) + (suffix.empty() ? "" : "*" + suffix);
        pieces.emplace_back(q < 0, body);
    };
    push_rat(e.rational_part(), "");
    for (const auto& [n, q] : e.linear_part()) push_rat(q, n);
    for (const auto& [k, q] : e.quadratic_part()) push_rat(q, k.first + "*" + k.second);
    if (pieces.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0)
            out += (pieces[i].first ? "-" : "") + pieces[i].second;
        else
            out += (pieces[i].first ? " - " : " + ") + pieces[i].second;
    }
    return out;
}

std::string tower_poly_str(const TowerPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<bool, std::string>> pieces;
    for (const auto& [m, c] : p.terms()) {
        unsigned n = c.order();
        const auto& coords = c.coords();
        for (size_t k = 0; k < coords.size(); ++k) {
            if (coords[k] == 0) continue;
            Rat q = coords[k];
            ScalarExponent arg = m.phase;
            arg.set_rational(rat_mod1(rat(static_cast<long>(k), static_cast<long>(n))));
            std::vector<std::string> factors;
            Rat a = abs(q);
            if (m.pi_pow == 1)
                factors.push_back("pi");
            else if (m.pi_pow > 1)
                factors.push_back("pi^" + std::to_string(m.pi_pow));
            for (const auto& [nm, pw] : m.names)
                factors.push_back(pw == 1 ? nm : nm + "^" + std::to_string(pw));
            if (!arg.is_zero()) factors.push_back("exp(i*2*pi*(" + exponent_str(arg) + "))");
            std::string body;
            if (factors.empty()) {
                body = rat_str(a);
            } else {
                body = (a == 1) ? "" : rat_str(a) + "*";
                for (size_t i = 0; i < factors.size(); ++i)
                    body += (i ? "*" : "") + factors[i];
            }
            pieces.emplace_back(q < 0, body);
        }
    }
    std::string out;
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0)
            out += (pieces[i].first ? "-" : "") + pieces[i].second;
        else
            out += (pieces[i].first ? " - " : " + ") + pieces[i].second;
    }
    return out;
}

std::string Scalar::str() const {
    if (!has_denominator()) return tower_poly_str(num_);
    return "(" + tower_poly_str(num_) + ")/(" + tower_poly_str(den_) + ")";
}

}  // namespace derham
