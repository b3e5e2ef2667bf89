#include "tamedeg/reduction.hpp"

#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

#include "tamedeg/linalg.hpp"
#include "tamedeg/semigroup.hpp"

namespace tamedeg {

namespace {

bool tops_dependent(const Polynomial& f, const Polynomial& g)
{
    return !alg_independent(top(f), top(g));
}

}  // namespace

ReducedPairStats pair_stats(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("pair_stats: zero polynomial");
    const bool swap = degree(f) > degree(g);
    const Polynomial& lo = swap ? g : f;
    const Polynomial& hi = swap ? f : g;

    ReducedPairStats s;
    s.swapped = swap;
    s.deg_f = degree(lo).value();
    s.deg_g = degree(hi).value();
    s.p = s.deg_f == 0 ? 1 : s.deg_f / std::gcd(s.deg_f, s.deg_g);
    s.poisson_deg = poisson_degree(lo, hi);
    s.independent = s.poisson_deg != 0;
    s.tops_dependent = tops_dependent(lo, hi);
    s.tops_not_nested = !top_in_algebra_of(lo, hi) && !top_in_algebra_of(hi, lo);
    return s;
}

std::int64_t su_bound(std::uint64_t deg_f, std::uint64_t deg_g, std::uint64_t poisson_deg, std::uint64_t q,
                      std::uint64_t r)
{
    if (deg_f == 0) throw std::invalid_argument("su_bound: deg f must be positive");
    if (deg_f > deg_g) throw std::invalid_argument("su_bound: requires deg f <= deg g");
    const auto p = deg_f / std::gcd(deg_f, deg_g);
    if (r >= p) throw std::invalid_argument("su_bound: r must be below p = " + std::to_string(p));
    const auto f = static_cast<std::int64_t>(deg_f);
    const auto g = static_cast<std::int64_t>(deg_g);
    const auto per_q = static_cast<std::int64_t>(p) * g - g - f + static_cast<std::int64_t>(poisson_deg);
    return static_cast<std::int64_t>(q) * per_q + static_cast<std::int64_t>(r) * g;
}

FilterReport types_I_IV_filter(std::uint64_t p1, std::uint64_t p2, std::uint64_t d3)
{
    FilterReport rep;
    rep.p1 = p1;
    rep.p2 = p2;
    rep.d3 = d3;
    rep.applicable = p1 >= 3 && p1 < p2 && p2 <= d3 && is_prime(p1) && is_prime(p2);
    rep.parity_allows = p1 % 2 == 0 || p2 % 2 == 0 || d3 % 2 == 0;

    if (d3 % 2 == 0) {
        const auto n = d3 / 2;
        rep.half = n;
        auto odd_multiple = [n](std::uint64_t p) {
            if (n == 0 || p % n != 0) return false;
            const auto s = p / n;
            return s >= 3 && s % 2 == 1;
        };
        rep.type_i_ii_possible = odd_multiple(p1) || odd_multiple(p2);
        // n < p1 <= 3n/2, p2 = 3n   or   p1 = 3n/2, 5n/2 < p2 <= 3n
        const bool iii = n < p1 && 2 * p1 <= 3 * n && p2 == 3 * n;
        const bool iv = 2 * p1 == 3 * n && 5 * n < 2 * p2 && p2 <= 3 * n;
        rep.type_iii_iv_possible = iii || iv;
    }

    if (!rep.applicable) {
        rep.reason = "not applicable: requires odd primes p1 < p2 <= d3";
        return rep;
    }
    if (!rep.parity_allows) {
        rep.excluded = true;
        rep.reason = "d3 odd: types I-IV need an even degree";
        return rep;
    }
    const auto n = *rep.half;
    rep.excluded = !rep.type_i_ii_possible && !rep.type_iii_iv_possible;
    rep.reason = "d3 = 2n with n = " + std::to_string(n) + ": " +
                 (rep.excluded ? "p1, p2 <= 2n rule out s n (s >= 3 odd), 3n and 5n/2 bounds"
                               : "a numeric precondition of types I-IV holds");
    return rep;
}

namespace {

struct Candidate {
    std::uint64_t i, j;
    Polynomial product;  // F_a^i F_b^j
};

std::optional<std::vector<Rational>> solve_at_threshold(const Polynomial& ft, const std::vector<Candidate>& cands,
                                                        std::uint64_t threshold)
{
    std::map<Monomial, std::size_t, std::greater<>> rows;
    auto collect = [&](const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) {
            if (m.total_degree() < threshold) break;
            rows.try_emplace(m, 0);
        }
    };
    collect(ft);
    for (const auto& c : cands) collect(c.product);
    std::size_t idx = 0;
    for (auto& [m, r] : rows) r = idx++;

    RationalMatrix a(rows.size(), std::vector<Rational>(cands.size(), 0));
    std::vector<Rational> b(rows.size(), 0);
    for (const auto& [m, c] : ft.terms()) {
        if (m.total_degree() < threshold) break;
        b[rows.at(m)] = c;
    }
    for (std::size_t k = 0; k < cands.size(); ++k)
        for (const auto& [m, c] : cands[k].product.terms()) {
            if (m.total_degree() < threshold) break;
            a[rows.at(m)][k] = c;
        }
    return solve(a, b);
}

std::array<std::size_t, 2> others(std::size_t target)
{
    switch (target) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
    }
}

}  // namespace

std::optional<ReductionWitness> elementary_search(const PolyMap& f, const SearchOptions& options)
{
    if (f.n() != 3) throw std::invalid_argument("elementary_search: map must have 3 coordinates");
    if (options.target >= 3) throw std::out_of_range("elementary_search: target out of range");
    const auto [a, b] = others(options.target);
    const Polynomial& ft = f[options.target];
    if (ft.is_zero()) throw std::invalid_argument("elementary_search: target coordinate is zero");
    const auto dt = degree(ft).value();
    const auto budget = options.budget.value_or(dt);
    if (budget < dt) throw std::invalid_argument("elementary_search: budget below target degree");
    const Degree da = degree(f[a]), db = degree(f[b]);
    if (da < Degree(1) || db < Degree(1))
        throw std::invalid_argument("elementary_search: the other coordinates must be non-constant");

    std::vector<Candidate> cands;
    Polynomial pa = Polynomial::constant(3, 1);
    for (std::uint64_t i = 0; i * da.value() <= budget; ++i) {
        Polynomial pij = pa;
        for (std::uint64_t j = 0; i * da.value() + j * db.value() <= budget; ++j) {
            cands.push_back({i, j, pij});
            pij = pij * f[b];
        }
        pa = pa * f[a];
    }

    auto best = solve_at_threshold(ft, cands, dt);
    if (!best) return std::nullopt;
    if (options.minimize)
        for (std::uint64_t t = dt; t-- > 0;) {
            auto next = solve_at_threshold(ft, cands, t);
            if (!next) break;
            best = std::move(next);
        }

    ReductionWitness w;
    w.target = options.target;
    w.budget = budget;
    w.g = Polynomial(2);
    Polynomial residual = ft;
    for (std::size_t k = 0; k < cands.size(); ++k) {
        const Rational& c = (*best)[k];
        if (c == 0) continue;
        w.g.add_term(Monomial({static_cast<std::uint32_t>(cands[k].i), static_cast<std::uint32_t>(cands[k].j)}), c);
        residual -= c * cands[k].product;
    }
    w.new_degree = degree(residual);
    if (!recheck(f, w)) throw std::logic_error("elementary_search: witness failed re-verification");
    return w;
}

bool recheck(const PolyMap& f, const ReductionWitness& w)
{
    if (f.n() != 3 || w.target >= 3 || w.g.nvars() != 2) return false;
    const auto [a, b] = others(w.target);
    const Polynomial args[] = {f[a], f[b]};
    const Polynomial reduced = f[w.target] - compose(w.g, args);
    const Degree d = degree(reduced);
    return d == w.new_degree && d < degree(f[w.target]);
}

}  // namespace tamedeg
