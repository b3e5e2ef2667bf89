#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamedeg/poly.hpp"

namespace tamedeg {

/// Degree data and *-reduced conditions for a pair with deg f <= deg g.
struct ReducedPairStats {
    std::uint64_t deg_f = 0;
    std::uint64_t deg_g = 0;
    std::uint64_t p = 1;  // deg_f / gcd(deg_f, deg_g)
    std::uint64_t poisson_deg = 0;
    bool independent = false;      // (i)  f, g algebraically independent
    bool tops_dependent = false;   // (ii) top f, top g algebraically dependent
    bool tops_not_nested = false;  // (iii) neither top lies in the algebra of the other
    bool swapped = false;          // inputs were reordered to get deg f <= deg g

    bool star_reduced() const { return independent && tops_dependent && tops_not_nested; }
    /// *-reduced with deg f < deg g.
    bool p_reduced() const { return star_reduced() && deg_f < deg_g; }
};

/// Swaps the inputs when deg f > deg g. Throws on zero polynomials.
ReducedPairStats pair_stats(const Polynomial& f, const Polynomial& g);

/// Lower bound q (p deg g - deg g - deg f + deg[f,g]) + r deg g for
/// deg G(f,g) where deg_y G = p q + r and p = deg f / gcd(deg f, deg g).
/// Throws when r >= p, deg f = 0 or deg f > deg g.
std::int64_t su_bound(std::uint64_t deg_f, std::uint64_t deg_g, std::uint64_t poisson_deg, std::uint64_t q,
                      std::uint64_t r);

/// Numeric preconditions of the non-elementary reduction types I-IV, each
/// evaluated for a hypothetical automorphism of multidegree (p1, p2, d3).
struct FilterReport {
    std::uint64_t p1 = 0, p2 = 0, d3 = 0;
    bool applicable = false;  // p1 < p2 <= d3 odd primes
    bool parity_allows = false;  // some degree is even
    std::optional<std::uint64_t> half;  // n with d3 = 2n
    bool type_i_ii_possible = false;  // p1 or p2 = s n for odd s >= 3
    bool type_iii_iv_possible = false;
    bool excluded = false;  // applicable and no type can occur
    std::string reason;
    friend bool operator==(const FilterReport&, const FilterReport&) = default;
};

FilterReport types_I_IV_filter(std::uint64_t p1, std::uint64_t p2, std::uint64_t d3);

/// F_target - g(F_a, F_b) has degree new_degree < deg F_target, where
/// (a, b) are the other two coordinates in increasing order.
struct ReductionWitness {
    std::size_t target = 0;  // zero-based
    Polynomial g;            // in 2 variables: u = F_a, v = F_b
    Degree new_degree;
    std::uint64_t budget = 0;
    friend bool operator==(const ReductionWitness&, const ReductionWitness&) = default;
};

struct SearchOptions {
    std::size_t target = 0;  // zero-based
    std::optional<std::uint64_t> budget;  // default: deg F_target
    bool minimize = false;
};

/// Bounded exact search for an elementary reduction of a 3-coordinate map.
/// The candidate g ranges over monomials u^i v^j with i deg F_a + j deg F_b <=
/// budget; absence is only a statement about that support.
std::optional<ReductionWitness> elementary_search(const PolyMap& f, const SearchOptions& options);

/// Recomputes F_target - g(F_a, F_b) and checks the recorded degree drop.
bool recheck(const PolyMap& f, const ReductionWitness& w);

}  // namespace tamedeg
