#pragma once

/*
  Exact multivariate polynomial and rational-function arithmetic over the
  integers.  Indeterminates are the cell variables a[i,j] of a lattice-path
  array, ordered lexicographically by (i,j).  Terms are kept in graded-lex
  order, so equality of polynomials is structural comparison and the text
  form is canonical.
*/

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace drh {

using Int = boost::multiprecision::cpp_int;

// The indeterminate a[col,row]; (col,row) are the axis coordinates of the
// upper-right vertex of the cell carrying it.
struct Var {
    int col = 0;
    int row = 0;

    friend auto operator<=>(const Var&, const Var&) = default;
};

std::string to_string(const Var& v);

// Exponent vector, sparse: sorted by variable, exponents > 0.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<Var, int>> factors);

    static Monomial one() { return Monomial{}; }
    static Monomial var(Var v, int exp = 1);

    const std::vector<std::pair<Var, int>>& factors() const { return factors_; }
    int degree() const;
    bool is_one() const { return factors_.empty(); }
    int exponent_of(Var v) const;

    Monomial operator*(const Monomial& o) const;
    // Componentwise quotient; nullopt when not divisible.
    std::optional<Monomial> divide(const Monomial& o) const;
    bool divides(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

private:
    std::vector<std::pair<Var, int>> factors_;
};

// Graded lexicographic order: first total degree, then lex on the exponent
// vector read along increasing variables.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Int, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(Int c);
    static Polynomial variable(Var v);
    static Polynomial constant(Int c) { return Polynomial(std::move(c)); }
    static Polynomial term(Monomial m, Int c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Leading term under grlex.
    const std::pair<const Monomial, Int>& leading() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    // Strict total order compatible with canonical form (used for sets).
    static int compare(const Polynomial& a, const Polynomial& b);

    // Exact evaluation at integer points (for randomized identity checks).
    Int evaluate(const std::map<Var, Int>& point) const;

    std::vector<Var> variables() const;

    // Canonical text form, leading term first.
    std::string str() const;

    void add_term(const Monomial& m, const Int& c);

private:
    TermMap terms_;
};

Polynomial operator*(const Int& c, const Polynomial& p);

// Exact division; nullopt when q does not divide p.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

// Multivariate gcd by recursive content / primitive-part reduction.
// Result is sign-normalized so its leading coefficient is positive.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

Int int_gcd(Int a, Int b);

class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}
    // Reduces and sign-normalizes; throws on zero denominator.
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_polynomial() const { return den_.is_one(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction inverse() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    Polynomial num_;
    Polynomial den_;
};

// Spec-named operation surface.
inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den);
// True iff the reduced denominator is 1; also hands back the numerator.
std::pair<bool, Polynomial> is_polynomial(const RationalFunction& r);

}  // namespace drh
