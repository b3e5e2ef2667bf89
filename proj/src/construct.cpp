#include "tamedeg/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamedeg {

std::optional<Realization> realize_detailed(std::span<const std::uint64_t> degrees)
{
    if (!std::is_sorted(degrees.begin(), degrees.end()))
        throw std::invalid_argument("realize: degrees must be sorted ascending");
    if (std::find(degrees.begin(), degrees.end(), 0U) != degrees.end())
        throw std::invalid_argument("realize: degrees must be positive");

    const std::size_t n = degrees.size();
    for (std::size_t i = n; i-- > 1;) {
        auto rep = member(degrees.first(i), degrees[i]);
        if (!rep) continue;

        TameWord word(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            word.append(ElementaryFactor(j, Polynomial::monomial(
                                                Monomial::variable(n, i, static_cast<std::uint32_t>(degrees[j])))));
        }
        std::vector<std::uint32_t> exps(n, 0);
        for (std::size_t j = 0; j < i; ++j) exps[j] = static_cast<std::uint32_t>(rep->coefficients[j]);
        word.append(ElementaryFactor(i, Polynomial::monomial(Monomial(std::move(exps)))));
        return Realization{std::move(word), i, std::move(*rep)};
    }
    return std::nullopt;
}

std::optional<TameWord> realize(std::span<const std::uint64_t> degrees)
{
    auto r = realize_detailed(degrees);
    if (!r) return std::nullopt;
    return std::move(r->word);
}

bool Inequality::holds() const
{
    switch (rel) {
    case Rel::Less: return lhs < rhs;
    case Rel::LessEq: return lhs <= rhs;
    case Rel::Greater: return lhs > rhs;
    case Rel::GreaterEq: return lhs >= rhs;
    case Rel::NotEqual: return lhs != rhs;
    }
    return false;
}

std::string to_string(Inequality::Rel rel)
{
    switch (rel) {
    case Inequality::Rel::Less: return "<";
    case Inequality::Rel::LessEq: return "<=";
    case Inequality::Rel::Greater: return ">";
    case Inequality::Rel::GreaterEq: return ">=";
    case Inequality::Rel::NotEqual: return "!=";
    }
    return "?";
}

bool NonMemberTrace::valid() const
{
    auto chain_ok = [](const CoordinateObstruction& c) {
        return std::all_of(c.chain.begin(), c.chain.end(), [](const Inequality& q) { return q.holds(); });
    };
    const bool residues_ok = residues.size() == p1 && std::none_of(residues.begin(), residues.end(),
                                                                     [](const ResidueCheck& r) { return r.reachable; });
    return sylvester.holds() && types_filter.excluded && residues_ok && chain_ok(third) && chain_ok(second) &&
           chain_ok(first);
}

namespace {

using Rel = Inequality::Rel;

std::int64_t s(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// Reducing the coordinate of degree `target` by g(F_small, F_d3): the bracket
// term forces q = 0, then d3 > target forces r = 0, and g(F_small) has degree
// in small*N, which misses target.
CoordinateObstruction side_obstruction(const std::string& name, std::uint64_t small, std::uint64_t target,
                                       std::uint64_t d3)
{
    CoordinateObstruction c;
    c.coordinate = name;
    const auto k = s(small), t = s(target), d = s(d3);
    c.chain = {
        {"d3 mod " + std::to_string(small) + " != 0", d % k, Rel::NotEqual, 0},
        {"p*d3 - d3 - p + 2 >= p*d3 - 2*d3", k * d - d - k + 2, Rel::GreaterEq, k * d - 2 * d},
        {"p*d3 - 2*d3 >= d3", k * d - 2 * d, Rel::GreaterEq, d},
        {"d3 > " + std::to_string(target), d, Rel::Greater, t},
        {std::to_string(target) + " mod " + std::to_string(small) + " != 0", t % k, Rel::NotEqual, 0},
    };
    return c;
}

}  // namespace

NonMemberTrace nonmember_trace(std::uint64_t p1, std::uint64_t p2, std::uint64_t d3)
{
    if (!(p1 >= 3 && p1 < p2 && is_prime(p1) && is_prime(p2)))
        throw std::invalid_argument("nonmember_trace: requires odd primes p1 < p2");
    if (d3 < p2) throw std::invalid_argument("nonmember_trace: requires d3 >= p2");
    const std::uint64_t gens[] = {p1, p2};
    if (is_member(gens, d3))
        throw std::invalid_argument("nonmember_trace: " + std::to_string(d3) + " lies in <" + std::to_string(p1) +
                                    "," + std::to_string(p2) + ">");

    NonMemberTrace t{};
    t.p1 = p1;
    t.p2 = p2;
    t.d3 = d3;
    t.sylvester_bound = (p1 - 1) * (p2 - 1);
    t.sylvester = {"d3 < (p1-1)(p2-1)", s(d3), Rel::Less, s(t.sylvester_bound)};
    t.types_filter = types_I_IV_filter(p1, p2, d3);

    for (std::uint64_t r = 0; r < p1; ++r)
        t.residues.push_back({r, r * p2 <= d3 && (d3 - r * p2) % p1 == 0});

    const auto bracket_floor = s(p1 * p2) - s(p1) - s(p2) + 2;
    t.third.coordinate = "F3";
    t.third.chain = {
        {"p1*p2 - p1 - p2 + 2 > (p1-1)(p2-1)", bracket_floor, Rel::Greater, s(t.sylvester_bound)},
        {"p1*p2 - p1 - p2 + 2 > d3 (forces q = 0)", bracket_floor, Rel::Greater, s(d3)},
    };
    t.second = side_obstruction("F2", p1, p2, d3);
    t.first = side_obstruction("F1", p2, p1, d3);
    t.first.symmetric_to_previous = true;

    if (!t.valid()) throw std::logic_error("nonmember_trace: a recorded check failed re-evaluation");
    return t;
}

namespace {

constexpr std::array<std::array<std::uint64_t, 3>, 4> kKnownNonMembers{{
    {3, 4, 5},
    {3, 5, 7},
    {4, 5, 7},
    {4, 5, 11},
}};

}  // namespace

const char* const known_nonmember_citation =
    "known from earlier work: no tame automorphism of C^3 has multidegree (3,4,5), (3,5,7), (4,5,7) or (4,5,11)";

std::span<const std::array<std::uint64_t, 3>> known_nonmembers()
{
    return kKnownNonMembers;
}

Verdict decide(std::uint64_t d1, std::uint64_t d2, std::uint64_t d3)
{
    if (d1 == 0) throw std::invalid_argument("decide: degrees must be positive");
    if (!(d1 <= d2 && d2 <= d3)) throw std::invalid_argument("decide: degrees must be sorted ascending");

    const std::uint64_t degrees[] = {d1, d2, d3};
    if (auto r = realize_detailed(degrees))
        return Member{std::move(r->representation), r->index, std::move(r->word)};

    const std::array<std::uint64_t, 3> triple{d1, d2, d3};
    if (std::find(kKnownNonMembers.begin(), kKnownNonMembers.end(), triple) != kKnownNonMembers.end())
        return KnownNonMember{known_nonmember_citation};

    if (d1 >= 3 && d1 < d2 && is_prime(d1) && is_prime(d2)) return NonMember{nonmember_trace(d1, d2, d3)};

    return OutOfScope{"no constructive witness, and (" + std::to_string(d1) + "," + std::to_string(d2) +
                      ") is not a pair of distinct odd primes"};
}

std::string verdict_name(const Verdict& v)
{
    struct Visitor {
        std::string operator()(const Member&) const { return "member"; }
        std::string operator()(const NonMember&) const { return "nonmember"; }
        std::string operator()(const KnownNonMember&) const { return "known_nonmember"; }
        std::string operator()(const OutOfScope&) const { return "out_of_scope"; }
    };
    return std::visit(Visitor{}, v);
}

}  // namespace tamedeg
