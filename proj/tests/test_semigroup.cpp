#include "doctest.h"

#include <numeric>

#include "oracle.hpp"
#include "tamedeg/semigroup.hpp"

using namespace tamedeg;

using V = std::vector<std::uint64_t>;

TEST_SUITE("semigroup") {

TEST_CASE("member")
{
    const V g57{5, 7};
    const auto r = member(g57, 24);
    REQUIRE(r);
    CHECK(r->coefficients == V{2, 2});
    CHECK_FALSE(member(g57, 23));
    const V g3{3};
    REQUIRE(member(g3, 0));
    CHECK(member(g3, 0)->coefficients == V{0});
    const V g35{3, 5};
    CHECK(member(g35, 8)->coefficients == V{1, 1});
}

TEST_CASE("greedy tie-break prefers the largest generator")
{
    const V g{3, 5};
    CHECK(member(g, 15)->coefficients == V{0, 3});
    const V h{2, 3, 5};
    CHECK(member(h, 10)->coefficients == V{0, 0, 2});
    const V dup{3, 3, 5};
    CHECK(member(dup, 6)->coefficients == V{0, 2, 0});
}

TEST_CASE("frobenius")
{
    CHECK(frobenius(GeneratorPair::coprime(5, 7)) == 23u);
    CHECK(frobenius(GeneratorPair::coprime(7, 11)) == 59u);
    CHECK(frobenius(GeneratorPair::coprime(2, 3)) == 1u);
    CHECK_FALSE(frobenius(GeneratorPair::coprime(1, 4)));
    CHECK_THROWS_AS(GeneratorPair::coprime(4, 6), std::domain_error);
    CHECK_THROWS(GeneratorPair(0, 3));
}

TEST_CASE("gaps")
{
    CHECK(gaps(GeneratorPair::coprime(3, 5)).gaps == V{1, 2, 4, 7});
    CHECK(gaps(GeneratorPair::coprime(5, 7)).gaps == V{1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23});
    CHECK(gaps(GeneratorPair::coprime(2, 3)).gaps == V{1});
    CHECK(gaps_at_least(GeneratorPair::coprime(5, 11), 11) == V{12, 13, 14, 17, 18, 19, 23, 24, 28, 29, 34, 39});
    CHECK(gaps_at_least(GeneratorPair::coprime(5, 13), 13) ==
          V{14, 16, 17, 19, 21, 22, 24, 27, 29, 32, 34, 37, 42, 47});
    CHECK(gaps_at_least(GeneratorPair::coprime(3, 7), 7) == V{8, 11});
}

TEST_CASE("three prime exceptions")
{
    CHECK(three_prime_exceptions(5) == V{7});
    CHECK(three_prime_exceptions(7) == V{8, 11});
    CHECK(three_prime_exceptions(11) == V{13, 16, 19});
    CHECK_THROWS(three_prime_exceptions(9));
    CHECK_THROWS(three_prime_exceptions(3));
}

TEST_CASE("property: sieve agrees with enumeration")
{
    for (std::uint64_t a = 2; a <= 20; ++a)
        for (std::uint64_t b = a + 1; b <= 20; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const auto f = (a - 1) * (b - 1) - 1;
            CHECK(gaps(GeneratorPair::coprime(a, b)).gaps == oracle::gaps_by_enumeration(a, b, 1, f + a * b));
        }
}

TEST_CASE("property: Sylvester bound, Frobenius number and gap count")
{
    for (std::uint64_t a = 2; a <= 50; ++a)
        for (std::uint64_t b = a + 1; b <= 50; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const GeneratorPair pair = GeneratorPair::coprime(a, b);
            const V gens{a, b};
            const MembershipTable table(gens, (a - 1) * (b - 1) + a * b);
            for (auto k = (a - 1) * (b - 1); k <= table.limit(); ++k) REQUIRE(table.contains(k));
            CHECK_FALSE(table.contains((a - 1) * (b - 1) - 1));
            const auto g = gaps(pair).gaps;
            CHECK(g.back() == *frobenius(pair));
            CHECK(g.size() == (a - 1) * (b - 1) / 2);
        }
}

TEST_CASE("property: representations evaluate to the target")
{
    const V gens{4, 7, 9};
    const MembershipTable table(gens, 200);
    for (std::uint64_t t = 0; t <= 200; ++t) {
        const auto r = table.representation(t);
        CHECK(r.has_value() == table.contains(t));
        if (r) CHECK(r->value(gens) == t);
    }
}

TEST_CASE("property: three prime formula matches the sieve")
{
    for (std::uint64_t p = 5; p <= 199; ++p)
        if (is_prime(p)) CHECK(three_prime_exceptions(p) == gaps_at_least(GeneratorPair::coprime(3, p), p));
}

TEST_CASE("property: residue classes are disjoint")
{
    for (const auto& [p1, p2] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 5}, {5, 7}, {7, 11}, {11, 13}}) {
        std::vector<int> hits(p1 * p2 * 3, 0);
        for (std::uint64_t r = 0; r < p1; ++r)
            for (std::uint64_t v = r * p2; v < hits.size(); v += p1) ++hits[v];
        for (auto h : hits) CHECK(h <= 1);
    }
}

}
