#include "tamedeg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tamedeg {

std::uint64_t Representation::value(std::span<const std::uint64_t> generators) const
{
    if (generators.size() != coefficients.size())
        throw std::invalid_argument("representation does not match generator list");
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < generators.size(); ++j) sum += coefficients[j] * generators[j];
    return sum;
}

GeneratorPair::GeneratorPair(std::uint64_t a, std::uint64_t b) : a_(std::min(a, b)), b_(std::max(a, b))
{
    if (a_ == 0) throw std::invalid_argument("generators must be positive");
}

GeneratorPair GeneratorPair::coprime(std::uint64_t a, std::uint64_t b)
{
    GeneratorPair p(a, b);
    if (std::gcd(a, b) != 1)
        throw std::domain_error("generators " + std::to_string(a) + " and " + std::to_string(b) + " are not coprime");
    return p;
}

MembershipTable::MembershipTable(std::span<const std::uint64_t> generators, std::uint64_t limit)
    : generators_(generators.begin(), generators.end()), order_(generators.size()), limit_(limit)
{
    if (generators_.empty()) throw std::invalid_argument("member: empty generator list");
    if (std::find(generators_.begin(), generators_.end(), 0U) != generators_.end())
        throw std::invalid_argument("member: generators must be positive");

    const std::size_t m = generators_.size();
    // Greedy order: largest generator first; among equals the later index first.
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
        return generators_[x] != generators_[y] ? generators_[x] > generators_[y] : x > y;
    });

    reach_.assign(m + 1, std::vector<char>(limit + 1, 0));
    reach_[m][0] = 1;
    for (std::size_t s = m; s-- > 0;) {
        const auto g = generators_[order_[s]];
        for (std::uint64_t t = 0; t <= limit; ++t)
            reach_[s][t] = reach_[s + 1][t] || (t >= g && reach_[s][t - g]);
    }
}

bool MembershipTable::contains(std::uint64_t target) const
{
    if (target > limit_) throw std::out_of_range("membership table limit exceeded");
    return reach_[0][target] != 0;
}

std::optional<Representation> MembershipTable::representation(std::uint64_t target) const
{
    if (!contains(target)) return std::nullopt;
    const std::size_t m = generators_.size();
    Representation rep{std::vector<std::uint64_t>(m, 0)};
    std::uint64_t rest = target;
    for (std::size_t s = 0; s < m; ++s) {
        const auto g = generators_[order_[s]];
        std::uint64_t k = rest / g;
        while (!reach_[s + 1][rest - k * g]) --k;
        rep.coefficients[order_[s]] = k;
        rest -= k * g;
    }
    return rep;
}

std::optional<Representation> member(std::span<const std::uint64_t> generators, std::uint64_t target)
{
    return MembershipTable(generators, target).representation(target);
}

std::optional<std::uint64_t> frobenius(const GeneratorPair& pair)
{
    if (std::gcd(pair.a(), pair.b()) != 1) throw std::domain_error("frobenius: generators are not coprime");
    if (pair.has_unit()) return std::nullopt;
    return (pair.a() - 1) * (pair.b() - 1) - 1;
}

GapSet gaps(const GeneratorPair& pair)
{
    if (std::gcd(pair.a(), pair.b()) != 1) throw std::domain_error("gaps: generators are not coprime");
    GapSet result{pair, {}};
    if (pair.has_unit()) return result;
    const std::uint64_t gens[] = {pair.a(), pair.b()};
    const std::uint64_t conductor = (pair.a() - 1) * (pair.b() - 1);
    const MembershipTable table(gens, conductor);
    for (std::uint64_t k = 1; k < conductor; ++k)
        if (!table.contains(k)) result.gaps.push_back(k);
    return result;
}

std::vector<std::uint64_t> gaps_at_least(const GeneratorPair& pair, std::uint64_t m)
{
    auto all = gaps(pair).gaps;
    all.erase(all.begin(), std::lower_bound(all.begin(), all.end(), m));
    return all;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> three_prime_exceptions(std::uint64_t p2)
{
    if (p2 <= 3 || !is_prime(p2))
        throw std::domain_error("three_prime_exceptions: " + std::to_string(p2) + " is not a prime greater than 3");
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = p2 / 3; k >= 1; --k) out.push_back(2 * p2 - 3 * k);
    return out;
}

}  // namespace tamedeg
