#include "tamedeg/tame.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace tamedeg {

LinearFactor::LinearFactor(RationalMatrix matrix, std::vector<Rational> shift)
    : matrix_(std::move(matrix)), shift_(std::move(shift))
{
    if (matrix_.size() != shift_.size()) throw std::invalid_argument("linear factor: matrix and shift sizes differ");
    for (const auto& row : matrix_)
        if (row.size() != shift_.size()) throw std::invalid_argument("linear factor: matrix is not square");
    if (determinant(matrix_) == 0) throw std::invalid_argument("linear factor: matrix is singular");
}

ElementaryFactor::ElementaryFactor(std::size_t index, Polynomial addend) : index_(index), addend_(std::move(addend))
{
    if (index_ >= addend_.nvars())
        throw std::invalid_argument("elementary factor: index " + std::to_string(index_ + 1) + " out of range");
    if (addend_.involves(index_))
        throw std::invalid_argument("elementary factor: addend involves x" + std::to_string(index_ + 1));
}

std::size_t arity(const Factor& f)
{
    return std::visit([](const auto& x) { return x.n(); }, f);
}

Factor inverse(const Factor& f)
{
    if (const auto* e = std::get_if<ElementaryFactor>(&f)) return ElementaryFactor(e->index(), -e->addend());
    const auto& lin = std::get<LinearFactor>(f);
    // y = A x + b  <=>  x = A^-1 y - A^-1 b
    auto inv = *inverse(lin.matrix());
    std::vector<Rational> shift(lin.n(), 0);
    for (std::size_t i = 0; i < lin.n(); ++i)
        for (std::size_t j = 0; j < lin.n(); ++j) shift[i] -= inv[i][j] * lin.shift()[j];
    return LinearFactor(std::move(inv), std::move(shift));
}

TameWord::TameWord(std::size_t n, std::vector<Factor> factors) : n_(n)
{
    for (auto& f : factors) append(std::move(f));
}

TameWord& TameWord::append(Factor f)
{
    if (arity(f) != n_)
        throw std::invalid_argument("tame word: factor arity " + std::to_string(arity(f)) + " does not match " +
                                    std::to_string(n_));
    factors_.push_back(std::move(f));
    return *this;
}

TameWord TameWord::concat(const TameWord& other) const
{
    TameWord r = *this;
    for (const auto& f : other.factors_) r.append(f);
    return r;
}

PolyMap apply(const Factor& f, const PolyMap& g)
{
    if (arity(f) != g.n()) throw std::invalid_argument("apply: factor and map arity differ");
    const std::size_t n = g.n();
    if (const auto* e = std::get_if<ElementaryFactor>(&f)) {
        PolyMap r = g;
        r[e->index()] += compose(e->addend(), g.coords());
        return r;
    }
    const auto& lin = std::get<LinearFactor>(f);
    std::vector<Polynomial> coords;
    coords.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial c = Polynomial::constant(n, lin.shift()[i]);
        for (std::size_t j = 0; j < n; ++j)
            if (lin.matrix()[i][j] != 0) c += lin.matrix()[i][j] * g[j];
        coords.push_back(std::move(c));
    }
    return PolyMap(std::move(coords));
}

PolyMap apply_word(const TameWord& w, PolyMap g)
{
    for (const auto& f : w.factors()) g = tamedeg::apply(f, g);
    return g;
}

PolyMap expand(const TameWord& w)
{
    return apply_word(w, PolyMap::identity(w.n()));
}

TameWord invert(const TameWord& w)
{
    TameWord r(w.n());
    for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it) r.append(inverse(*it));
    return r;
}

Multidegree mdeg(const PolyMap& f)
{
    Multidegree m;
    for (std::size_t i = 0; i < f.n(); ++i) {
        const Degree d = degree(f[i]);
        if (!d.is_finite()) throw std::domain_error("mdeg: coordinate " + std::to_string(i + 1) + " is zero");
        m.degrees.push_back(d.value());
    }
    return m;
}

VerificationReport verify(const TameWord& w)
{
    VerificationReport report;
    const PolyMap id = PolyMap::identity(w.n());
    const TameWord inv = invert(w);
    report.map = expand(w);
    report.multidegree = mdeg(report.map);
    report.right_inverse = apply_word(w, expand(inv)) == id;
    report.left_inverse = apply_word(inv, report.map) == id;
    report.jacobian = jacobian_det(report.map);
    report.jacobian_nonzero_constant = report.jacobian.is_constant() && !report.jacobian.is_zero();
    return report;
}

namespace {

// Raw mt19937_64 draws reduced by modulo; the distribution adaptors are
// implementation-defined and would break golden words across toolchains.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    std::int64_t nonzero_coefficient()
    {
        const auto v = between(-3, 2);
        return v >= 0 ? v + 1 : v;
    }

private:
    std::mt19937_64 engine_;
};

ElementaryFactor random_elementary(Draw& draw, std::size_t n, std::uint32_t dmax)
{
    const auto index = static_cast<std::size_t>(draw.below(n));
    Polynomial addend(n);
    const auto nterms = 1 + draw.below(2);
    for (std::uint64_t t = 0; t < nterms; ++t) {
        std::vector<std::uint32_t> exps(n, 0);
        const auto d = static_cast<std::uint32_t>(1 + draw.below(dmax));
        for (std::uint32_t k = 0; k < d; ++k) {
            auto v = static_cast<std::size_t>(draw.below(n - 1));
            if (v >= index) ++v;
            ++exps[v];
        }
        addend.add_term(Monomial(std::move(exps)), draw.nonzero_coefficient());
    }
    return {index, std::move(addend)};
}

LinearFactor random_linear(Draw& draw, std::size_t n)
{
    for (;;) {
        RationalMatrix m(n, std::vector<Rational>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? draw.nonzero_coefficient() : draw.between(-1, 1);
        std::vector<Rational> shift(n, 0);
        for (auto& s : shift) s = draw.between(-1, 1);
        if (determinant(m) != 0) return {std::move(m), std::move(shift)};
    }
}

}  // namespace

TameWord random_word(std::size_t n, std::size_t k, std::uint32_t dmax, std::uint64_t seed)
{
    if (dmax == 0) throw std::invalid_argument("random_word: dmax must be at least 1");
    if (n < 2 && k > 0) throw std::invalid_argument("random_word: need at least two variables");
    Draw draw(seed);
    TameWord w(n);
    for (std::size_t i = 0; i < k; ++i) {
        if (draw.below(5) == 0)
            w.append(random_linear(draw, n));
        else
            w.append(random_elementary(draw, n, dmax));
    }
    return w;
}

}  // namespace tamedeg
