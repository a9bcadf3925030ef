/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials over arbitrary-precision integers,
 *        their fraction field, and truncated power series in one extra
 *        indeterminate.
 *
 * Every polynomial carries its variable universe (a Ring). Terms are kept
 * in descending graded-lex order with no zero coefficients, so equality is
 * structural.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpk {

using Int = mpz_class;
using Rat = mpq_class;
using Exp = std::uint16_t;

/// Raised when an exact division has a nonzero remainder.
struct InexactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ordered list of variable names.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> lookup_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
/// Ring t1..tr.
RingPtr t_ring(int r);
bool same_ring(const RingPtr& a, const RingPtr& b);

class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring);

    static Poly constant(RingPtr ring, const Int& c);
    static Poly variable(RingPtr ring, std::size_t i);
    static Poly monomial(RingPtr ring, const std::vector<Exp>& e, const Int& c);

    const RingPtr& ring() const { return ring_; }
    std::size_t nvars() const { return nv_; }
    std::size_t size() const { return coef_.size(); }
    bool is_zero() const { return coef_.empty(); }
    bool is_one() const;
    bool is_constant() const;

    const Exp* exps(std::size_t term) const { return exps_.data() + term * nv_; }
    const Int& coef(std::size_t term) const { return coef_[term]; }
    std::vector<Exp> exponent(std::size_t term) const;

    /// Total degree of the leading term (graded order); -1 for zero.
    long degree() const;
    long degree_in(std::size_t var) const;
    /// Coefficient of the given exponent vector.
    Int coefficient(const std::vector<Exp>& e) const;
    /// Value with every variable set to zero.
    Int constant_term() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Int& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Int& c) { return a *= c; }
    friend Poly operator*(const Int& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned k) const;
    /// Multiply by the monomial c * x^e.
    Poly mul_term(const Exp* e, const Int& c) const;

    /// Integer gcd of the coefficients (nonnegative).
    Int content() const;
    /// Divide every coefficient by an integer that must divide it.
    Poly div_int(const Int& d) const;

    /// Evaluate at rational values for every variable.
    Rat eval(const std::vector<Rat>& at) const;
    /// Substitution homomorphism into @p target: variable i maps to images[i].
    Poly substitute(const std::vector<Poly>& images, const RingPtr& target) const;
    /// Re-express in a ring containing all variables that occur (by name).
    Poly rebase(const RingPtr& target) const;

    std::string to_string() const;

    /// Builds a polynomial from unsorted terms; duplicates are merged.
    static Poly from_terms(RingPtr ring, std::vector<Exp> exps, std::vector<Int> coefs);

private:
    friend class TermAccumulator;
    void check_ring(const Poly& o) const;
    Poly add_scaled(const Poly& o, int sign) const;

    RingPtr ring_;
    std::size_t nv_ = 0;
    std::vector<Exp> exps_;
    std::vector<Int> coef_;
};

/// Hash-based accumulation of terms; emits a canonical Poly.
class TermAccumulator {
public:
    explicit TermAccumulator(RingPtr ring, std::size_t reserve = 64);
    void add(const Exp* e, const Int& c);
    /// Adds c * x^(e1+e2).
    void add_product(const Exp* e1, const Exp* e2, const Int& c);
    void add_poly(const Poly& p);
    std::size_t size() const { return coef_.size(); }
    Poly finish();

private:
    std::size_t find_or_insert(const Exp* e, std::uint64_t h);
    void grow();

    RingPtr ring_;
    std::size_t nv_;
    std::vector<Exp> exps_;
    std::vector<Int> coef_;
    std::vector<std::uint32_t> table_;
    std::vector<Exp> scratch_;
};

/// Exact quotient p / q; throws InexactDivision if q does not divide p.
Poly exact_divide(const Poly& p, const Poly& q);
/// Exact quotient or nullopt.
std::optional<Poly> try_divide(const Poly& p, const Poly& q);
/// Greatest common divisor with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

/// Parses the text produced by to_string (variables must belong to @p ring).
Poly parse_poly(const std::string& text, const RingPtr& ring);

/// Quotient of polynomials; equality by cross multiplication.
class Frac {
public:
    Frac() = default;
    explicit Frac(Poly num);
    Frac(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// True when the denominator is 1 after normalization.
    bool is_poly() const { return den_.is_one(); }

    Frac operator-() const { return Frac(-num_, den_); }
    friend Frac operator+(const Frac& a, const Frac& b);
    friend Frac operator-(const Frac& a, const Frac& b);
    friend Frac operator*(const Frac& a, const Frac& b);
    friend Frac operator/(const Frac& a, const Frac& b);
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    friend bool operator==(const Frac& a, const Frac& b);
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    Frac inverse() const;
    /// Value at t = 0; requires den(0) != 0.
    Rat at_zero() const;
    Frac substitute(const std::vector<Poly>& images, const RingPtr& target) const;
    /// Reduces by the polynomial gcd of numerator and denominator.
    Frac reduced() const;
    std::string to_string() const;

private:
    void normalize();
    Poly num_, den_;
};

/// Power series in u truncated after u^N, with polynomial coefficients.
class USeries {
public:
    USeries(RingPtr ring, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Poly& operator[](int s) const { return c_.at(s); }
    Poly& operator[](int s) { return c_.at(s); }

    friend USeries operator*(const USeries& a, const USeries& b);
    /// Multiplies by (1 - a u).
    void mul_numerator(const Poly& a);
    /// Multiplies by 1/(1 - a u).
    void mul_denominator(const Poly& a);

private:
    RingPtr ring_;
    std::vector<Poly> c_;
};

/// One linear factor c + a u of a generating-function product.
struct SeriesFactor {
    Poly c;
    Poly a;
    bool denominator;
};

/// Product of numerator factors (c + a u) and denominator factors 1/(c + a u)
/// truncated after u^N. Denominator factors need c = +-1.
USeries series_from_factors(const RingPtr& ring, const std::vector<SeriesFactor>& factors, int order);

}  // namespace mpk
