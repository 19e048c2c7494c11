#include "drh/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace drh {

std::string to_string(const Var& v)
{
    return "a[" + std::to_string(v.col) + "," + std::to_string(v.row) + "]";
}

Monomial::Monomial(std::vector<std::pair<Var, int>> factors) : factors_(std::move(factors))
{
    std::sort(factors_.begin(), factors_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < factors_.size(); ++i)
        if (factors_[i - 1].first == factors_[i].first)
            throw std::invalid_argument("Monomial: repeated variable");
    for (const auto& [v, e] : factors_)
        if (e <= 0) throw std::invalid_argument("Monomial: nonpositive exponent");
}

Monomial Monomial::var(Var v, int exp)
{
    Monomial m;
    if (exp != 0) m.factors_.push_back({v, exp});
    return m;
}

int Monomial::degree() const
{
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(Var v) const
{
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    size_t i = 0, j = 0;
    while (i < factors_.size() && j < o.factors_.size()) {
        if (factors_[i].first < o.factors_[j].first)
            r.factors_.push_back(factors_[i++]);
        else if (o.factors_[j].first < factors_[i].first)
            r.factors_.push_back(o.factors_[j++]);
        else {
            r.factors_.push_back({factors_[i].first, factors_[i].second + o.factors_[j].second});
            ++i, ++j;
        }
    }
    while (i < factors_.size()) r.factors_.push_back(factors_[i++]);
    while (j < o.factors_.size()) r.factors_.push_back(o.factors_[j++]);
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const
{
    Monomial r;
    size_t i = 0, j = 0;
    while (j < o.factors_.size()) {
        if (i >= factors_.size()) return std::nullopt;
        if (factors_[i].first < o.factors_[j].first) {
            r.factors_.push_back(factors_[i++]);
        } else if (o.factors_[j].first < factors_[i].first) {
            return std::nullopt;
        } else {
            int e = factors_[i].second - o.factors_[j].second;
            if (e < 0) return std::nullopt;
            if (e > 0) r.factors_.push_back({factors_[i].first, e});
            ++i, ++j;
        }
    }
    while (i < factors_.size()) r.factors_.push_back(factors_[i++]);
    return r;
}

bool Monomial::divides(const Monomial& o) const { return o.divide(*this).has_value(); }

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const
{
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Lex on exponent vectors over increasing variables: the monomial with
    // the larger exponent at the first differing variable is lex-larger.
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first < fb[j].first) return false;   // a has the earlier var: a larger
        if (fb[j].first < fa[i].first) return true;
        if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second;
        ++i, ++j;
    }
    if (i < fa.size()) return false;
    if (j < fb.size()) return true;
    return false;
}

Polynomial::Polynomial(Int c)
{
    if (c != 0) terms_.emplace(Monomial::one(), std::move(c));
}

Polynomial Polynomial::variable(Var v)
{
    Polynomial p;
    p.terms_.emplace(Monomial::var(v), Int(1));
    return p;
}

Polynomial Polynomial::term(Monomial m, Int c)
{
    Polynomial p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::degree() const
{
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

const std::pair<const Monomial, Int>& Polynomial::leading() const
{
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

void Polynomial::add_term(const Monomial& m, const Int& c)
{
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial operator*(const Int& c, const Polynomial& p)
{
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : p.terms()) r.add_term(m, c * k);
    return r;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b)
{
    GrlexLess less;
    auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return -1;
        if (less(ib->first, ia->first)) return 1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms_.rend()) return 1;
    if (ib != b.terms_.rend()) return -1;
    return 0;
}

Int Polynomial::evaluate(const std::map<Var, Int>& point) const
{
    Int total = 0;
    for (const auto& [m, c] : terms_) {
        Int t = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end()) throw std::invalid_argument("evaluate: unassigned variable");
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        total += t;
    }
    return total;
}

std::vector<Var> Polynomial::variables() const
{
    std::vector<Var> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::string Polynomial::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Int& c = it->second;
        bool neg = c < 0;
        Int abs = neg ? Int(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool coeff_shown = abs != 1 || it->first.is_one();
        if (coeff_shown) out << abs.str();
        bool star = coeff_shown;
        for (const auto& [v, e] : it->first.factors()) {
            if (star) out << "*";
            out << to_string(v);
            if (e > 1) out << "^" << e;
            star = true;
        }
    }
    return out.str();
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q)
{
    if (q.is_zero()) return std::nullopt;
    Polynomial rem = p;
    Polynomial quot;
    const auto& [qm, qc] = q.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        auto m = rm.divide(qm);
        if (!m) return std::nullopt;
        if (rc % qc != 0) return std::nullopt;
        Int c = rc / qc;
        Polynomial t = Polynomial::term(*m, c);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

Int int_gcd(Int a, Int b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

namespace {

Int content_int(const Polynomial& p)
{
    Int g = 0;
    for (const auto& [m, c] : p.terms()) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

// View p as a univariate polynomial in v with Polynomial coefficients.
std::vector<Polynomial> coeffs_in(const Polynomial& p, Var v)
{
    int deg = 0;
    for (const auto& [m, c] : p.terms()) deg = std::max(deg, m.exponent_of(v));
    std::vector<Polynomial> cs(deg + 1);
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent_of(v);
        std::vector<std::pair<Var, int>> rest;
        for (const auto& [w, k] : m.factors())
            if (!(w == v)) rest.push_back({w, k});
        cs[e].add_term(Monomial(std::move(rest)), c);
    }
    return cs;
}

Polynomial from_coeffs(const std::vector<Polynomial>& cs, Var v)
{
    Polynomial p;
    for (size_t e = 0; e < cs.size(); ++e) {
        Polynomial pe = cs[e] * Polynomial::term(Monomial::var(v, static_cast<int>(e)), 1);
        if (e == 0) pe = cs[e];
        p += pe;
    }
    return p;
}

Polynomial gcd_rec(Polynomial a, Polynomial b);

// Content of p w.r.t. v = gcd of its coefficients as polynomials in the
// remaining variables.
Polynomial content_in(const std::vector<Polynomial>& cs)
{
    Polynomial g;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd_rec(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Pseudo-remainder of a by b in the variable v (lc(b)^k * a = q*b + r).
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, Var v)
{
    auto bc = coeffs_in(b, v);
    int db = static_cast<int>(bc.size()) - 1;
    const Polynomial& lb = bc.back();
    while (true) {
        if (a.is_zero()) return a;
        auto ac = coeffs_in(a, v);
        int da = static_cast<int>(ac.size()) - 1;
        if (da < db) return a;
        Polynomial la = ac.back();
        // a <- lb*a - la*v^(da-db)*b
        Polynomial shift = Polynomial::term(Monomial::var(v, da - db), 1);
        if (da == db) shift = Polynomial::constant(1);
        a = lb * a - la * shift * b;
    }
}

Polynomial gcd_rec(Polynomial a, Polynomial b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) {
        Int g = int_gcd(content_int(a), content_int(b));
        return Polynomial::constant(g);
    }
    // Main variable: smallest variable occurring in either.
    Var v = std::min(a.variables().front(), b.variables().front());
    auto ca = coeffs_in(a, v);
    auto cb = coeffs_in(b, v);
    if (ca.size() == 1 || cb.size() == 1) {
        // One of them does not involve v.
        Polynomial small = ca.size() == 1 ? a : b;
        const auto& other = ca.size() == 1 ? cb : ca;
        Polynomial g = small;
        for (const auto& c : other) {
            if (c.is_zero()) continue;
            g = gcd_rec(g, c);
            if (g.is_one()) return g;
        }
        return g;
    }
    Polynomial cont_a = content_in(ca);
    Polynomial cont_b = content_in(cb);
    Polynomial pa = *divide_exact(a, cont_a);
    Polynomial pb = *divide_exact(b, cont_b);
    // Euclid on primitive parts via pseudo-remainders.
    while (true) {
        if (pb.is_zero()) break;
        Polynomial r = pseudo_rem(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = Polynomial();
        } else {
            auto cr = coeffs_in(r, v);
            Polynomial cont_r = content_in(cr);
            pb = *divide_exact(r, cont_r);
        }
    }
    // pa is the primitive gcd in v up to sign/content.
    auto cp = coeffs_in(pa, v);
    Polynomial cont_p = content_in(cp);
    Polynomial prim = *divide_exact(pa, cont_p);
    return gcd_rec(cont_a, cont_b) * prim;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial g = gcd_rec(a, b);
    if (g.is_zero()) return g;
    if (g.leading().second < 0) g = -g;
    return g;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
{
    if (den.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial::constant(1);
        return;
    }
    Polynomial g = poly_gcd(num, den);
    num_ = *divide_exact(num, g);
    den_ = *divide_exact(den, g);
    if (den_.leading().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const
{
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const
{
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const
{
    if (o.num_.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const
{
    if (num_.is_zero()) throw std::invalid_argument("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
}

std::string RationalFunction::str() const
{
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den)
{
    return RationalFunction(num, den);
}

std::pair<bool, Polynomial> is_polynomial(const RationalFunction& r)
{
    return {r.is_polynomial(), r.num()};
}

}  // namespace drh
