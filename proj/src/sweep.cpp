#include "tamedeg/sweep.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tamedeg/construct.hpp"
#include "tamedeg/reduction.hpp"
#include "tamedeg/semigroup.hpp"
#include "tamedeg/tame.hpp"

namespace tamedeg {

namespace {

template <class Out, class In, class Fn>
std::vector<Out> map_items(std::span<const In> items, Exec exec, Fn&& fn)
{
    std::vector<Out> out(items.size());
    const auto n = static_cast<std::int64_t>(items.size());
    if (exec == Exec::Serial) {
        for (std::int64_t i = 0; i < n; ++i) out[i] = fn(items[i]);
        return out;
    }
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) out[i] = fn(items[i]);
    return out;
}

bool brute_force_member(std::uint64_t a, std::uint64_t b, std::uint64_t t)
{
    for (std::uint64_t k = 0; k * a <= t; ++k)
        if ((t - k * a) % b == 0) return true;
    return false;
}

}  // namespace

int worker_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<Triple> sorted_triples(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<Triple> out;
    for (auto a = lo; a <= hi; ++a)
        for (auto b = a; b <= hi; ++b)
            for (auto c = b; c <= hi; ++c) out.push_back({a, b, c});
    return out;
}

std::vector<WitnessCheck> check_witnesses(std::span<const Triple> triples, Exec exec)
{
    return map_items<WitnessCheck>(triples, exec, [](const Triple& t) {
        WitnessCheck c;
        c.triple = t;
        try {
            const Verdict v = decide(t[0], t[1], t[2]);
            c.verdict = verdict_name(v);
            if (const auto* m = std::get_if<Member>(&v)) {
                const auto report = verify(m->witness);
                c.mdeg_matches = report.multidegree.degrees == std::vector<std::uint64_t>(t.begin(), t.end());
                c.inverse_ok = report.left_inverse && report.right_inverse;
                c.jacobian_ok = report.jacobian_nonzero_constant;
            }
        } catch (const std::exception& e) {
            c.error = e.what();
        }
        return c;
    });
}

std::vector<ClassifyCheck> classify(std::span<const Triple> triples, Exec exec)
{
    return map_items<ClassifyCheck>(triples, exec, [](const Triple& t) {
        ClassifyCheck c;
        c.triple = t;
        try {
            const Verdict v = decide(t[0], t[1], t[2]);
            c.verdict = verdict_name(v);
            c.oracle_member = brute_force_member(t[0], t[1], t[2]);
            if (const auto* nm = std::get_if<NonMember>(&v)) c.trace_valid = nm->trace.valid();
        } catch (const std::exception& e) {
            c.error = e.what();
        }
        return c;
    });
}

std::vector<ReductionCheck> check_reductions(std::span<const Triple> triples, Exec exec)
{
    return map_items<ReductionCheck>(triples, exec, [](const Triple& t) {
        ReductionCheck c;
        c.triple = t;
        try {
            const auto r = realize_detailed(t);
            if (!r) return c;
            c.constructed = true;
            c.realized_index = r->index;
            const PolyMap f = expand(r->word);
            if (auto w = elementary_search(f, {.target = 2, .budget = t[2]})) {
                c.top_found = true;
                c.top_rechecked = recheck(f, *w);
                c.top_new_degree = w->new_degree;
            }
            if (r->index == 2) {
                c.realized_found = c.top_found;
                c.realized_rechecked = c.top_rechecked;
            } else if (auto w = elementary_search(f, {.target = r->index, .budget = t[2]})) {
                c.realized_found = true;
                c.realized_rechecked = recheck(f, *w);
            }
        } catch (const std::exception& e) {
            c.error = e.what();
        }
        return c;
    });
}

std::vector<FuzzCheck> fuzz_words(std::span<const std::uint64_t> seeds, std::size_t n, std::size_t max_factors,
                                  std::uint32_t dmax, Exec exec)
{
    return map_items<FuzzCheck>(seeds, exec, [&](std::uint64_t seed) {
        FuzzCheck c;
        c.seed = seed;
        c.factors = static_cast<std::size_t>(seed % (max_factors + 1));
        try {
            const auto report = verify(random_word(n, c.factors, dmax, seed));
            c.passed = report.passed();
            c.mdeg = report.multidegree.degrees;
        } catch (const std::exception& e) {
            c.error = e.what();
        }
        return c;
    });
}

std::vector<std::vector<std::uint64_t>> exception_tables(std::span<const std::array<std::uint64_t, 2>> pairs,
                                                         Exec exec)
{
    // Validate up front; exceptions must not escape the parallel region.
    for (const auto& p : pairs) GeneratorPair::coprime(p[0], p[1]);
    return map_items<std::vector<std::uint64_t>>(pairs, exec, [](const std::array<std::uint64_t, 2>& p) {
        const auto pair = GeneratorPair::coprime(p[0], p[1]);
        return gaps_at_least(pair, pair.b());
    });
}

}  // namespace tamedeg
