#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tamedeg/reduction.hpp"
#include "tamedeg/semigroup.hpp"
#include "tamedeg/tame.hpp"

namespace tamedeg {

/// Word for (d1 <= ... <= dn) when some d_i is a nonnegative combination
/// of d_1..d_{i-1}. The largest such i is used: x_j += x_i^{d_j} for every
/// j != i, then x_i += prod_{j<i} x_j^{k_j}. Throws on unsorted or zero input.
std::optional<TameWord> realize(std::span<const std::uint64_t> degrees);

/// Like realize(), also returning the index i (zero-based) and its
/// representation over d_1..d_{i-1}.
struct Realization {
    TameWord word;
    std::size_t index;
    Representation representation;
};
std::optional<Realization> realize_detailed(std::span<const std::uint64_t> degrees);

/// One recorded comparison "lhs rel rhs"; holds is re-evaluated from the
/// numbers, never set by hand.
struct Inequality {
    enum class Rel { Less, LessEq, Greater, GreaterEq, NotEqual };
    std::string label;
    std::int64_t lhs;
    Rel rel;
    std::int64_t rhs;

    bool holds() const;
    friend bool operator==(const Inequality&, const Inequality&) = default;
};

std::string to_string(Inequality::Rel rel);

/// Residue class r*p2 + p1*N, checked to miss d3.
struct ResidueCheck {
    std::uint64_t r;
    bool reachable;  // r*p2 <= d3 and p1 | d3 - r*p2
    friend bool operator==(const ResidueCheck&, const ResidueCheck&) = default;
};

struct CoordinateObstruction {
    std::string coordinate;  // "F3", "F2", "F1"
    std::vector<Inequality> chain;
    bool symmetric_to_previous = false;
    friend bool operator==(const CoordinateObstruction&, const CoordinateObstruction&) = default;
};

/// Certificate that (p1, p2, d3) is not a multidegree of a tame
/// automorphism, for odd primes p1 < p2 <= d3 with d3 outside <p1,p2>.
struct NonMemberTrace {
    std::uint64_t p1, p2, d3;
    std::uint64_t sylvester_bound;  // (p1-1)(p2-1)
    Inequality sylvester;
    FilterReport types_filter;
    std::vector<ResidueCheck> residues;  // F3: r = 0..p1-1
    CoordinateObstruction third, second, first;

    /// Every recorded inequality and residue check holds.
    bool valid() const;
    friend bool operator==(const NonMemberTrace&, const NonMemberTrace&) = default;
};

/// Throws std::invalid_argument when the preconditions fail.
NonMemberTrace nonmember_trace(std::uint64_t p1, std::uint64_t p2, std::uint64_t d3);

struct Member {
    Representation representation;
    std::size_t index;  // coordinate realized as a combination, zero-based
    TameWord witness;
    friend bool operator==(const Member&, const Member&) = default;
};
struct NonMember {
    NonMemberTrace trace;
    friend bool operator==(const NonMember&, const NonMember&) = default;
};
struct KnownNonMember {
    std::string citation;
    friend bool operator==(const KnownNonMember&, const KnownNonMember&) = default;
};
struct OutOfScope {
    std::string reason;
    friend bool operator==(const OutOfScope&, const OutOfScope&) = default;
};

using Verdict = std::variant<Member, NonMember, KnownNonMember, OutOfScope>;

/// Triples known not to be multidegrees of tame automorphisms from earlier
/// work, independent of the two-prime criterion.
std::span<const std::array<std::uint64_t, 3>> known_nonmembers();
extern const char* const known_nonmember_citation;

/// Classifies a sorted triple 1 <= d1 <= d2 <= d3.
Verdict decide(std::uint64_t d1, std::uint64_t d2, std::uint64_t d3);

std::string verdict_name(const Verdict& v);

}  // namespace tamedeg
