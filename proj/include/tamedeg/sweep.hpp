#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tamedeg/poly.hpp"

namespace tamedeg {

using Triple = std::array<std::uint64_t, 3>;

/// Serial is the reference path; Parallel fans out over OpenMP threads and
/// must produce identical, identically ordered results.
enum class Exec { Serial, Parallel };

/// Sorted triples lo <= d1 <= d2 <= d3 <= hi.
std::vector<Triple> sorted_triples(std::uint64_t lo, std::uint64_t hi);

struct WitnessCheck {
    Triple triple;
    std::string verdict;
    bool mdeg_matches = false;
    bool inverse_ok = false;   // both compositions with the inverse are the identity
    bool jacobian_ok = false;  // nonzero constant determinant
    std::string error;

    bool ok() const { return verdict != "member" || (mdeg_matches && inverse_ok && jacobian_ok && error.empty()); }
    friend bool operator==(const WitnessCheck&, const WitnessCheck&) = default;
};

/// decide() on every triple; Member witnesses are expanded and verified.
std::vector<WitnessCheck> check_witnesses(std::span<const Triple> triples, Exec exec);

struct ClassifyCheck {
    Triple triple;
    std::string verdict;
    bool oracle_member = false;  // d3 in <d1,d2> by brute-force enumeration
    bool trace_valid = false;    // NonMember only
    std::string error;

    friend bool operator==(const ClassifyCheck&, const ClassifyCheck&) = default;
};

std::vector<ClassifyCheck> classify(std::span<const Triple> triples, Exec exec);

struct ReductionCheck {
    Triple triple;
    bool constructed = false;
    std::size_t realized_index = 0;  // zero-based coordinate built as a combination
    bool top_found = false;          // reduction of the top-degree coordinate
    bool top_rechecked = false;
    Degree top_new_degree;
    bool realized_found = false;  // reduction of the realized coordinate
    bool realized_rechecked = false;
    std::string error;

    friend bool operator==(const ReductionCheck&, const ReductionCheck&) = default;
};

/// realize() each triple and search for elementary reductions with budget d3.
std::vector<ReductionCheck> check_reductions(std::span<const Triple> triples, Exec exec);

struct FuzzCheck {
    std::uint64_t seed = 0;
    std::size_t factors = 0;
    bool passed = false;
    std::vector<std::uint64_t> mdeg;
    std::string error;

    friend bool operator==(const FuzzCheck&, const FuzzCheck&) = default;
};

/// random_word(n, seed % (max_factors + 1), dmax, seed) for each seed, then verify().
std::vector<FuzzCheck> fuzz_words(std::span<const std::uint64_t> seeds, std::size_t n, std::size_t max_factors,
                                  std::uint32_t dmax, Exec exec);

/// Gaps >= b of <a,b> for each coprime pair.
std::vector<std::vector<std::uint64_t>> exception_tables(std::span<const std::array<std::uint64_t, 2>> pairs,
                                                         Exec exec);

int worker_threads();

}  // namespace tamedeg
