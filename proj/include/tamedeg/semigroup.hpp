#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tamedeg {

/// Coefficients k_j with sum k_j * gen_j equal to the represented target,
/// aligned with the generator list they were computed against.
struct Representation {
    std::vector<std::uint64_t> coefficients;

    std::uint64_t value(std::span<const std::uint64_t> generators) const;
    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Two generators a <= b of a numerical semigroup. Use coprime() where the
/// Frobenius number or gap set is needed.
class GeneratorPair {
public:
    GeneratorPair(std::uint64_t a, std::uint64_t b);
    /// Same as the constructor but also rejects gcd(a,b) != 1.
    static GeneratorPair coprime(std::uint64_t a, std::uint64_t b);

    std::uint64_t a() const { return a_; }
    std::uint64_t b() const { return b_; }
    bool has_unit() const { return a_ == 1; }

private:
    std::uint64_t a_;
    std::uint64_t b_;
};

struct GapSet {
    GeneratorPair pair;
    std::vector<std::uint64_t> gaps;  // ascending
};

/// Reachability table for sums of a fixed generator list over 0..limit.
/// Representations use the same tie-break as member().
class MembershipTable {
public:
    MembershipTable(std::span<const std::uint64_t> generators, std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    bool contains(std::uint64_t target) const;
    std::optional<Representation> representation(std::uint64_t target) const;

private:
    std::vector<std::uint64_t> generators_;
    std::vector<std::size_t> order_;
    std::uint64_t limit_;
    std::vector<std::vector<char>> reach_;  // reach_[s][t]: t is a sum of order_[s..]
};

/// Coin-change membership. Among all representations, the coefficient of
/// the largest generator is maximised first, then the next largest, and so on.
/// Throws on an empty list or a zero generator.
std::optional<Representation> member(std::span<const std::uint64_t> generators, std::uint64_t target);

inline bool is_member(std::span<const std::uint64_t> generators, std::uint64_t target)
{
    return member(generators, target).has_value();
}

/// (a-1)(b-1)-1, or nullopt when a generator is 1 (nothing is a gap).
std::optional<std::uint64_t> frobenius(const GeneratorPair& pair);

/// All gaps, found by sieving 1..(a-1)(b-1)-1 with member().
GapSet gaps(const GeneratorPair& pair);

std::vector<std::uint64_t> gaps_at_least(const GeneratorPair& pair, std::uint64_t m);

bool is_prime(std::uint64_t n);

/// {2 p2 - 3k : k = 1..floor(p2/3)} ascending, for primes p2 > 3.
std::vector<std::uint64_t> three_prime_exceptions(std::uint64_t p2);

}  // namespace tamedeg
