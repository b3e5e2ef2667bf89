#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tamedeg {

using Rational = mpq_class;

/// Total degree of a polynomial. The zero polynomial has degree minus
/// infinity, which compares below every natural number.
class Degree {
public:
    constexpr Degree() = default;
    constexpr Degree(std::uint64_t value) : value_(value) {}  // NOLINT(implicit)

    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_finite() const { return value_.has_value(); }
    std::uint64_t value() const;

    friend constexpr bool operator==(const Degree&, const Degree&) = default;
    friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b)
    {
        if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
        return *a.value_ <=> *b.value_;
    }
    friend constexpr Degree operator+(const Degree& a, const Degree& b)
    {
        if (!a.value_ || !b.value_) return {};
        return Degree(*a.value_ + *b.value_);
    }

    std::string to_string() const;

private:
    std::optional<std::uint64_t> value_;
};

/// Exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

    std::size_t nvars() const { return exps_.size(); }
    std::uint64_t total_degree() const { return total_; }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::span<const std::uint32_t> exponents() const { return exps_; }

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded lexicographic order with x1 > x2 > ... > xn.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.total_ <=> b.total_; c != 0) return c;
        return a.exps_ <=> b.exps_;
    }

private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t total_ = 0;
};

/// Sparse multivariate polynomial over Q. Terms are kept in descending
/// graded-lex order; no stored coefficient is zero.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, std::greater<>>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(const Monomial& m, const Rational& c = 1);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of m (zero if absent).
    Rational coefficient(const Monomial& m) const;
    /// Adds c*m in place, pruning a zero result.
    void add_term(const Monomial& m, const Rational& c);

    bool is_constant() const;
    bool involves(std::size_t var) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial pow(const Polynomial& f, std::uint64_t e);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return sub(f, g); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return mul(f, g); }
Polynomial operator*(const Rational& c, const Polynomial& f);

/// Substitutes args[k] for the k-th variable of g. All args share one arity,
/// which becomes the arity of the result.
Polynomial compose(const Polynomial& g, std::span<const Polynomial> args);

Degree degree(const Polynomial& f);

/// Highest homogeneous part. Throws on the zero polynomial.
Polynomial top(const Polynomial& f);

Polynomial partial(const Polynomial& f, std::size_t var);

/// The 2x2 Jacobian minors df/dxi*dg/dxj - df/dxj*dg/dxi for i < j, in
/// (i,j) lexicographic order.
std::vector<Polynomial> jacobian_minors(const Polynomial& f, const Polynomial& g);

/// 0 for algebraically dependent pairs, otherwise 2 + max degree of the
/// nonzero 2x2 Jacobian minors.
std::uint64_t poisson_degree(const Polynomial& f, const Polynomial& g);

bool alg_independent(const Polynomial& f, const Polynomial& g);

/// Whether top(f) lies in Q[top(g)].
bool top_in_algebra_of(const Polynomial& f, const Polynomial& g);

/// A polynomial endomorphism of affine n-space, coordinate by coordinate.
class PolyMap {
public:
    PolyMap() = default;
    explicit PolyMap(std::vector<Polynomial> coords);

    static PolyMap identity(std::size_t n);

    std::size_t n() const { return coords_.size(); }
    const Polynomial& operator[](std::size_t i) const { return coords_[i]; }
    Polynomial& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Polynomial> coords() const { return coords_; }

    friend bool operator==(const PolyMap&, const PolyMap&) = default;

private:
    std::vector<Polynomial> coords_;
};

/// (outer o inner)(x) = outer(inner(x)).
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

Polynomial jacobian_det(const PolyMap& F);

}  // namespace tamedeg
