// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "tamedeg/cli.hpp"
#include "tamedeg/construct.hpp"
#include "tamedeg/reduction.hpp"
#include "tamedeg/semigroup.hpp"
#include "tamedeg/serialize.hpp"
#include "tamedeg/sweep.hpp"
#include "tamedeg/tame.hpp"

using namespace tamedeg;
using V = std::vector<std::uint64_t>;

namespace {

// Runtime ceilings in seconds, one per criterion.
constexpr double kLimit[10] = {0, 1, 1, 5, 30, 120, 60, 120, 60, 120};

constexpr std::uint64_t kWitnessMaxD3 = 40;
constexpr std::uint64_t kWitnessMinD1 = 3;
constexpr std::uint64_t kSylvesterMax = 50;
constexpr std::uint64_t kThreePrimeMax = 199;
constexpr std::uint64_t kPrimePairMax = 31;
constexpr std::size_t kSuInstances = 60;
constexpr std::uint64_t kSuMaxD3 = 12;
constexpr std::uint64_t kSuSeed = 20240601;
constexpr std::size_t kFuzzWords = 200;
constexpr std::size_t kFuzzMaxFactors = 6;
constexpr std::uint32_t kFuzzMaxDegree = 4;

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::string triple_str(const Triple& t)
{
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

Outcome frobenius_values()
{
    const auto a = frobenius(GeneratorPair::coprime(5, 7));
    const auto b = frobenius(GeneratorPair::coprime(7, 11));
    const bool ok = a == 23u && b == 59u && *a == 4 * 6 - 1 && *b == 6 * 10 - 1;
    return {ok, "F(5,7)=" + std::to_string(a.value_or(0)) + " F(7,11)=" + std::to_string(b.value_or(0))};
}

Outcome table_reproduction()
{
    // Lists as printed in the source tables.
    const std::vector<std::pair<std::array<std::uint64_t, 2>, V>> published{
        {{5, 7}, {8, 9, 11, 13, 16, 18, 21, 23}},
        {{5, 11}, {12, 13, 14, 17, 18, 19, 23, 24, 28, 29, 34, 39}},
        {{5, 13}, {14, 16, 17, 19, 21, 22, 24, 27, 29, 32, 34, 37, 42, 47}},
        {{7, 11}, {12, 13, 15, 16, 17, 19, 20, 23, 24, 26, 27, 30, 31, 34, 37, 38, 41, 45, 45, 48, 52, 59}},
    };
    std::vector<std::array<std::uint64_t, 2>> pairs;
    for (const auto& p : published) pairs.push_back(p.first);
    const auto derived = exception_tables(pairs, Exec::Parallel);

    Outcome o;
    for (std::size_t i = 0; i < published.size(); ++i) {
        const auto& paper = published[i].second;
        V expected = paper;
        const auto [a, b] = published[i].first;
        if (a == 5 && b == 7) std::erase(expected, 21u);
        if (a == 7 && b == 11) expected.erase(std::find(expected.begin(), expected.end(), 45u));
        if (derived[i] != expected) {
            o.ok = false;
            o.detail += "(" + std::to_string(a) + "," + std::to_string(b) + ") differs beyond the known discrepancies; ";
        }
    }
    // The diff report itself must name exactly these discrepancies.
    const std::vector<std::pair<std::string, Json>> expected_reports{
        {"5,7", Json::array({Json{{"kind", "not_a_gap"}, {"value", 21}, {"representation", {0, 3}}}})},
        {"5,11", Json::array()},
        {"5,13", Json::array()},
        {"7,11", Json::array({Json{{"kind", "duplicate"}, {"value", 45}}})},
    };
    for (const auto& [pair, want] : expected_reports) {
        const auto r = run_cli({"table", "--pair", pair, "--paper-diff", "--json"});
        const bool same = r.exit_code == 0 && Json::parse(r.out)["discrepancies"] == want;
        if (!same) {
            o.ok = false;
            o.detail += "diff report for (" + pair + ") is wrong; ";
        }
    }
    if (o.detail.empty()) o.detail = "(5,11),(5,13) exact; (5,7) only the representable 21; (7,11) only the repeated 45";
    return o;
}

Outcome three_prime_formula()
{
    std::size_t n = 0;
    for (std::uint64_t p = 5; p <= kThreePrimeMax; ++p) {
        if (!is_prime(p)) continue;
        ++n;
        if (three_prime_exceptions(p) != gaps_at_least(GeneratorPair::coprime(3, p), p))
            return {false, "mismatch at p2=" + std::to_string(p)};
    }
    return {true, std::to_string(n) + " primes"};
}

Outcome sylvester_sweep()
{
    std::size_t pairs = 0;
    for (std::uint64_t a = 2; a <= kSylvesterMax; ++a)
        for (std::uint64_t b = a + 1; b <= kSylvesterMax; ++b) {
            if (std::gcd(a, b) != 1) continue;
            ++pairs;
            const V gens{a, b};
            const auto c = (a - 1) * (b - 1);
            const MembershipTable table(gens, c + a * b);
            for (auto k = c; k <= c + a * b; ++k)
                if (!table.contains(k)) return {false, std::to_string(k) + " not representable by " + std::to_string(a) + "," + std::to_string(b)};
            if (table.contains(c - 1)) return {false, std::to_string(c - 1) + " representable by " + std::to_string(a) + "," + std::to_string(b)};
        }
    return {true, std::to_string(pairs) + " coprime pairs"};
}

std::vector<Triple> witness_range()
{
    std::vector<Triple> out;
    for (const auto& t : sorted_triples(kWitnessMinD1, kWitnessMaxD3)) out.push_back(t);
    return out;
}

Outcome classifier_soundness()
{
    const auto checks = check_witnesses(witness_range(), Exec::Parallel);
    std::size_t members = 0;
    for (const auto& c : checks) {
        if (!c.error.empty()) return {false, triple_str(c.triple) + ": " + c.error};
        if (c.verdict != "member") continue;
        ++members;
        if (!c.ok()) return {false, triple_str(c.triple) + " witness failed"};
    }
    return {true, std::to_string(members) + " member witnesses of " + std::to_string(checks.size()) + " triples"};
}

Outcome classifier_completeness()
{
    std::vector<Triple> triples;
    for (std::uint64_t p1 = 3; p1 <= kPrimePairMax; ++p1)
        for (std::uint64_t p2 = p1 + 1; p2 <= kPrimePairMax; ++p2) {
            if (!is_prime(p1) || !is_prime(p2)) continue;
            for (auto d3 = p2; d3 <= (p1 - 1) * (p2 - 1) + p1 * p2; ++d3) triples.push_back({p1, p2, d3});
        }
    std::size_t nonmembers = 0, cited = 0;
    for (const auto& c : classify(triples, Exec::Parallel)) {
        if (!c.error.empty()) return {false, triple_str(c.triple) + ": " + c.error};
        const V gens{c.triple[0], c.triple[1]};
        const bool sieve = is_member(gens, c.triple[2]);
        if ((c.verdict == "member") != sieve) return {false, triple_str(c.triple) + " verdict " + c.verdict};
        if (c.verdict == "nonmember") {
            ++nonmembers;
            if (!c.trace_valid) return {false, triple_str(c.triple) + " trace invalid"};
        } else if (c.verdict == "known_nonmember") {
            // Cited before the theorem branch fires; the trace must agree.
            ++cited;
            if (!nonmember_trace(c.triple[0], c.triple[1], c.triple[2]).valid())
                return {false, triple_str(c.triple) + " cited but trace invalid"};
        } else if (c.verdict != "member") {
            return {false, triple_str(c.triple) + " verdict " + c.verdict};
        }
    }
    return {true, std::to_string(triples.size()) + " triples, " + std::to_string(nonmembers) + " nonmember traces, " +
                      std::to_string(cited) + " cited nonmembers with valid traces"};
}

Outcome reduction_consistency()
{
    const auto checks = check_reductions(witness_range(), Exec::Parallel);
    std::size_t constructed = 0, missing = 0, missing_outside = 0, realized_ok = 0;
    std::string examples;
    for (const auto& c : checks) {
        if (!c.error.empty()) return {false, triple_str(c.triple) + ": " + c.error};
        if (!c.constructed) continue;
        ++constructed;
        if (c.top_found && !c.top_rechecked) return {false, triple_str(c.triple) + " reduction failed recheck"};
        if (c.realized_found && c.realized_rechecked) ++realized_ok;
        if (!c.top_found) {
            if (++missing <= 3) examples += " " + triple_str(c.triple);
            // g(F1, F2) within budget d3 has weighted degree in <d1, d2>.
            const V gens{c.triple[0], c.triple[1]};
            if (!is_member(gens, c.triple[2])) ++missing_outside;
        }
    }
    std::string detail = std::to_string(constructed) + " witnesses, top coordinate reduced in " +
                         std::to_string(constructed - missing) + ", realized coordinate reduced in " +
                         std::to_string(realized_ok);
    if (missing)
        detail += "; no top reduction within budget d3 for " + std::to_string(missing) + ", e.g." + examples + " (" +
                  std::to_string(missing_outside) + " of them have d3 outside <d1,d2>)";
    return {missing == 0, detail};
}

Polynomial random_bivariate(std::mt19937_64& rng, std::uint64_t y_degree)
{
    std::uniform_int_distribution<int> coef(1, 3), sign(0, 1), xdeg(0, 2), coin(0, 2);
    Polynomial G(2);
    const auto c = [&] { return Rational(sign(rng) ? coef(rng) : -coef(rng)); };
    G.add_term(Monomial({static_cast<std::uint32_t>(xdeg(rng)), static_cast<std::uint32_t>(y_degree)}), c());
    for (std::uint64_t j = 0; j <= y_degree; ++j)
        if (coin(rng) == 0) G.add_term(Monomial({static_cast<std::uint32_t>(xdeg(rng)), static_cast<std::uint32_t>(j)}), c());
    return G;
}

Outcome su_bound_property()
{
    struct Pair {
        Polynomial f, g;
        ReducedPairStats stats;
    };
    std::vector<Pair> pool;
    for (const auto& t : sorted_triples(2, kSuMaxD3)) {
        const auto w = realize(t);
        if (!w) continue;
        const PolyMap F = expand(*w);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                const auto s = pair_stats(F[i], F[j]);
                if (!s.p_reduced()) continue;
                pool.push_back(s.swapped ? Pair{F[j], F[i], s} : Pair{F[i], F[j], s});
            }
    }
    if (pool.empty()) return {false, "no p-reduced pairs among witness coordinates"};

    std::mt19937_64 rng(kSuSeed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<std::uint64_t> qdist(0, 1);
    std::size_t tight = 0;
    for (std::size_t k = 0; k < kSuInstances; ++k) {
        const auto& pr = pool[pick(rng)];
        const auto q = qdist(rng);
        std::uniform_int_distribution<std::uint64_t> rdist(0, pr.stats.p - 1);
        const auto r = rdist(rng);
        const auto G = random_bivariate(rng, pr.stats.p * q + r);
        const Polynomial args[] = {pr.f, pr.g};
        const auto d = degree(compose(G, args));
        const auto bound = su_bound(pr.stats.deg_f, pr.stats.deg_g, pr.stats.poisson_deg, q, r);
        if (!d.is_finite()) return {false, "G(f,g) vanished for an independent pair"};
        if (static_cast<std::int64_t>(d.value()) < bound)
            return {false, "degree " + d.to_string() + " below bound " + std::to_string(bound)};
        if (static_cast<std::int64_t>(d.value()) == bound) ++tight;
    }
    return {true, std::to_string(kSuInstances) + " instances from " + std::to_string(pool.size()) +
                      " p-reduced pairs, " + std::to_string(tight) + " tight"};
}

Outcome word_fuzz()
{
    std::vector<std::uint64_t> seeds(kFuzzWords);
    std::iota(seeds.begin(), seeds.end(), 1);
    for (const auto& c : fuzz_words(seeds, 3, kFuzzMaxFactors, kFuzzMaxDegree, Exec::Parallel)) {
        if (!c.error.empty()) return {false, "seed " + std::to_string(c.seed) + ": " + c.error};
        if (!c.passed) return {false, "seed " + std::to_string(c.seed) + " failed verification"};
    }
    return {true, std::to_string(kFuzzWords) + " words"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"frobenius values", frobenius_values},
        {"exception table reproduction", table_reproduction},
        {"three-prime formula", three_prime_formula},
        {"Sylvester representability sweep", sylvester_sweep},
        {"classifier soundness", classifier_soundness},
        {"classifier completeness vs oracle", classifier_completeness},
        {"reduction consistency", reduction_consistency},
        {"SU bound property", su_bound_property},
        {"word-algebra fuzz", word_fuzz},
    };
    std::printf("threads: %d\n", worker_threads());
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < kLimit[i + 1];
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::printf("%s %zu %s: %s [%.2f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), secs, kLimit[i + 1], in_time ? "" : ", exceeded");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
