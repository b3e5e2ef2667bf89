#include "tamedeg/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tamedeg {

namespace {

void require_same_arity(const Polynomial& f, const Polynomial& g, const char* op)
{
    if (f.nvars() != g.nvars())
        throw std::invalid_argument(std::string(op) + ": arity mismatch (" + std::to_string(f.nvars()) +
                                    " vs " + std::to_string(g.nvars()) + ")");
}

}  // namespace

std::uint64_t Degree::value() const
{
    if (!value_) throw std::logic_error("degree of the zero polynomial is minus infinity");
    return *value_;
}

std::string Degree::to_string() const
{
    return value_ ? std::to_string(*value_) : std::string("-inf");
}

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exps_(std::move(exponents)),
      total_(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0}))
{
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power)
{
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    std::vector<std::uint32_t> e(nvars, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    r.total_ += other.total_;
    return r;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c)
{
    Polynomial p(nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index)
{
    return monomial(Monomial::variable(nvars, index));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c)
{
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (m.nvars() != nvars_) throw std::invalid_argument("add_term: arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

bool Polynomial::involves(std::size_t var) const
{
    return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    require_same_arity(*this, other, "add");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    require_same_arity(*this, other, "sub");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial add(const Polynomial& f, const Polynomial& g)
{
    Polynomial r = f;
    r += g;
    return r;
}

Polynomial sub(const Polynomial& f, const Polynomial& g)
{
    Polynomial r = f;
    r -= g;
    return r;
}

Polynomial mul(const Polynomial& f, const Polynomial& g)
{
    require_same_arity(f, g, "mul");
    Polynomial r(f.nvars());
    Rational prod;
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms()) {
            prod = cf * cg;
            r.add_term(mf * mg, prod);
        }
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& f)
{
    Polynomial r = f;
    r *= c;
    return r;
}

Polynomial pow(const Polynomial& f, std::uint64_t e)
{
    Polynomial result = Polynomial::constant(f.nvars(), 1);
    Polynomial base = f;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        e >>= 1U;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

Polynomial compose(const Polynomial& g, std::span<const Polynomial> args)
{
    if (args.size() != g.nvars())
        throw std::invalid_argument("compose: expected " + std::to_string(g.nvars()) + " arguments, got " +
                                    std::to_string(args.size()));
    if (args.empty()) return g;
    const std::size_t n = args.front().nvars();
    for (const auto& a : args)
        if (a.nvars() != n) throw std::invalid_argument("compose: arguments differ in arity");

    // powers[k][e] = args[k]^e, filled on demand
    std::vector<std::vector<Polynomial>> powers(args.size());
    auto power_of = [&](std::size_t k, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[k];
        if (cache.empty()) cache.push_back(Polynomial::constant(n, 1));
        while (cache.size() <= e) cache.push_back(mul(cache.back(), args[k]));
        return cache[e];
    };

    Polynomial result(n);
    for (const auto& [m, c] : g.terms()) {
        Polynomial term = Polynomial::constant(n, c);
        for (std::size_t k = 0; k < args.size(); ++k)
            if (m[k] != 0) term = mul(term, power_of(k, m[k]));
        result += term;
    }
    return result;
}

Degree degree(const Polynomial& f)
{
    if (f.is_zero()) return Degree::minus_infinity();
    return f.terms().begin()->first.total_degree();
}

Polynomial top(const Polynomial& f)
{
    if (f.is_zero()) throw std::invalid_argument("top: zero polynomial has no highest homogeneous part");
    const auto d = f.terms().begin()->first.total_degree();
    Polynomial r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        if (m.total_degree() != d) break;
        r.add_term(m, c);
    }
    return r;
}

Polynomial partial(const Polynomial& f, std::size_t var)
{
    if (var >= f.nvars()) throw std::out_of_range("partial: variable index out of range");
    Polynomial r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        const auto e = m[var];
        if (e == 0) continue;
        std::vector<std::uint32_t> exps(m.exponents().begin(), m.exponents().end());
        --exps[var];
        r.add_term(Monomial(std::move(exps)), c * e);
    }
    return r;
}

std::vector<Polynomial> jacobian_minors(const Polynomial& f, const Polynomial& g)
{
    require_same_arity(f, g, "jacobian_minors");
    const std::size_t n = f.nvars();
    std::vector<Polynomial> df, dg;
    for (std::size_t i = 0; i < n; ++i) {
        df.push_back(partial(f, i));
        dg.push_back(partial(g, i));
    }
    std::vector<Polynomial> minors;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) minors.push_back(df[i] * dg[j] - df[j] * dg[i]);
    return minors;
}

std::uint64_t poisson_degree(const Polynomial& f, const Polynomial& g)
{
    if (f.nvars() < 2) throw std::invalid_argument("poisson_degree: needs at least two variables");
    Degree best = Degree::minus_infinity();
    for (const auto& minor : jacobian_minors(f, g)) best = std::max(best, degree(minor));
    return best.is_finite() ? 2 + best.value() : 0;
}

bool alg_independent(const Polynomial& f, const Polynomial& g)
{
    const auto minors = jacobian_minors(f, g);
    return std::any_of(minors.begin(), minors.end(), [](const Polynomial& m) { return !m.is_zero(); });
}

bool top_in_algebra_of(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("top_in_algebra_of: zero polynomial");
    require_same_arity(f, g, "top_in_algebra_of");
    const auto df = degree(f).value();
    const auto dg = degree(g).value();
    if (df == 0) return true;
    if (dg == 0 || df % dg != 0) return false;
    // A homogeneous element of Q[h] of degree df is c*h^(df/dg).
    const Polynomial tf = top(f);
    const Polynomial candidate = pow(top(g), df / dg);
    if (tf.size() != candidate.size()) return false;
    const Rational ratio = tf.terms().begin()->second / candidate.terms().begin()->second;
    return tf == ratio * candidate;
}

PolyMap::PolyMap(std::vector<Polynomial> coords) : coords_(std::move(coords))
{
    for (const auto& c : coords_)
        if (c.nvars() != coords_.size())
            throw std::invalid_argument("PolyMap: coordinate arity " + std::to_string(c.nvars()) +
                                        " does not match map size " + std::to_string(coords_.size()));
}

PolyMap PolyMap::identity(std::size_t n)
{
    std::vector<Polynomial> coords;
    coords.reserve(n);
    for (std::size_t i = 0; i < n; ++i) coords.push_back(Polynomial::variable(n, i));
    return PolyMap(std::move(coords));
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner)
{
    if (outer.n() != inner.n()) throw std::invalid_argument("compose: map sizes differ");
    std::vector<Polynomial> coords;
    coords.reserve(outer.n());
    for (const auto& c : outer.coords()) coords.push_back(compose(c, inner.coords()));
    return PolyMap(std::move(coords));
}

namespace {

// Laplace expansion along the first row; maps here have n <= 4 in practice.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, std::size_t nvars)
{
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(nvars, 1);
    if (n == 1) return m[0][0];
    Polynomial det(nvars);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][col] * determinant(minor, nvars);
        if (col % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace

Polynomial jacobian_det(const PolyMap& F)
{
    const std::size_t n = F.n();
    std::vector<std::vector<Polynomial>> jac(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) jac[i].push_back(partial(F[i], j));
    return determinant(jac, n);
}

}  // namespace tamedeg
