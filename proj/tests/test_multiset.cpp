#include <set>

#include "doctest.h"
#include "navoid/multiset.hpp"

using namespace navoid;

namespace {

ResidueMultiset additive(std::uint64_t m, std::initializer_list<std::uint64_t> elems) {
    return ResidueMultiset(m, GroupLaw::Additive, elems);
}

std::set<ResidueMultiset> as_set(const std::vector<ResidueMultiset>& v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("multiset construction and invariants") {
    ResidueMultiset m(5, GroupLaw::Additive, {7, 2, 3, 2});
    CHECK(m.size() == 4);
    CHECK(m.multiplicity(2) == 3);  // 7 reduces to 2
    CHECK(m.multiplicity(3) == 1);
    CHECK(m.entries().front().first < m.entries().back().first);
    CHECK_THROWS_AS(ResidueMultiset(6, GroupLaw::Multiplicative, {3}),
                    std::invalid_argument);
}

TEST_CASE("avoids_target on worked examples") {
    CHECK(avoids_target(additive(5, {2, 2, 3}), 1, SubsetRule::IncludeEmpty));
    CHECK(avoids_target(additive(5, {1, 1, 1, 1}), 0, SubsetRule::NonemptyOnly));
    CHECK(!avoids_target(additive(3, {1, 2}), 0, SubsetRule::NonemptyOnly));
    // the empty subset attains the identity
    CHECK(!avoids_target(additive(5, {2, 2}), 0, SubsetRule::IncludeEmpty));
    ResidueMultiset mult(7, GroupLaw::Multiplicative, {2});
    CHECK(avoids_target(mult, 3, SubsetRule::IncludeEmpty));
    CHECK(!avoids_target(mult, 1, SubsetRule::IncludeEmpty));
    CHECK(avoids_target(mult, 1, SubsetRule::NonemptyOnly));
    CHECK_THROWS_AS(avoids_target(mult, 0, SubsetRule::IncludeEmpty),
                    std::invalid_argument);
}

TEST_CASE("zero-sum kappa closed form matches exhaustive search, m <= 12") {
    for (std::uint64_t m = 2; m <= 12; ++m) {
        const KappaZero closed = kappa_cyclic_zero(m);
        const KappaSearch brute = kappa_zero_bruteforce(m, m + 1);
        CHECK(!brute.exceeds_cap);
        CHECK(closed.kappa == m - 1);
        CHECK(brute.kappa == m - 1);
        CHECK(as_set(brute.extremal) == as_set(closed.extremal));
        CHECK(closed.extremal.size() == euler_phi(m));
    }
    CHECK(kappa_cyclic_zero(1).kappa == 0);
    CHECK(kappa_cyclic_zero(1).extremal.empty());
    CHECK(kappa_cyclic_zero(2).extremal ==
          std::vector<ResidueMultiset>{additive(2, {1})});
}

TEST_CASE("avoiding kappa on worked examples") {
    const KappaSearch k93 = kappa_avoiding(9, 3, 20);
    CHECK(!k93.exceeds_cap);
    CHECK(k93.kappa == 7);

    const KappaSearch k52 = kappa_avoiding(5, 2, 20);
    CHECK(!k52.exceeds_cap);
    CHECK(k52.kappa == 3);
    CHECK(as_set(k52.extremal) ==
          as_set({additive(5, {1, 4, 4}), additive(5, {3, 3, 3})}));

    CHECK(kappa_avoiding(9, 1, 20).exceeds_cap);
    CHECK_THROWS_AS(kappa_avoiding(9, 0, 20), std::invalid_argument);
}

TEST_CASE("extremal avoider construction on worked examples") {
    CHECK(extremal_avoider(5, 1, 1, 2) == additive(5, {2, 2, 3}));
    CHECK(extremal_avoider(3, 1, 1, 1) == additive(3, {2}));
    CHECK(extremal_avoider(2, 2, 2, 1) == additive(4, {1, 3}));
    CHECK_THROWS_AS(extremal_avoider(5, 1, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(extremal_avoider(5, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("avoider construction satisfies the avoidance property, p^r <= 16") {
    for (std::uint64_t pr = 2; pr <= 16; ++pr) {
        const auto f = factorize(pr);
        if (f.size() != 1) continue;
        const std::uint64_t p = f[0].prime;
        const std::uint32_t r = f[0].exponent;
        const std::uint64_t prm1 = pr / p;
        for (std::uint64_t mult = 1; mult < p; ++mult) {
            const std::uint64_t a = prm1 * mult;
            for (std::uint64_t b = 1; b < pr; ++b) {
                if (b % p == 0) continue;
                const ResidueMultiset m = extremal_avoider(p, r, a, b);
                CHECK(m.size() == pr - 2);
                CHECK(avoids_target(m, a, SubsetRule::IncludeEmpty));
                CHECK(m == extremal_avoider(p, r, a, pr - b));
            }
        }
    }
}

TEST_CASE("extremal family on worked examples") {
    const ExtremalFamily f31 = extremal_family(3, 1);
    REQUIRE(f31.entries.size() == 1);
    CHECK(f31.entries[0].eta == 0);
    CHECK(f31.entries[0].c == 1);
    CHECK(f31.entries[0].multiset == additive(3, {2}));

    const ExtremalFamily f51 = extremal_family(5, 1);
    REQUIRE(f51.entries.size() == 2);
    CHECK(f51.entries[0].multiset == additive(5, {4, 4, 4}));
    CHECK(f51.entries[1].eta == 1);
    CHECK(f51.entries[1].c == 3);
    CHECK(f51.entries[1].multiset == additive(5, {2, 2, 3}));

    CHECK(extremal_family(2, 1).entries.empty());
    // p = 2 follows the recursion's exponent, eta = 2^(r-1) - 1
    const ExtremalFamily f23 = extremal_family(2, 3);
    REQUIRE(f23.entries.size() == 2);
    CHECK(f23.entries[0].eta == 3);
    CHECK(f23.entries[0].multiset == additive(8, {1, 1, 1, 7, 7, 7}));
    CHECK(f23.entries[1].multiset == additive(8, {3, 3, 3, 5, 5, 5}));
}

TEST_CASE("family counts and distinctness, p^r <= 16") {
    for (std::uint64_t pr = 2; pr <= 16; ++pr) {
        const auto f = factorize(pr);
        if (f.size() != 1) continue;
        const std::uint64_t p = f[0].prime;
        const std::uint32_t r = f[0].exponent;
        const ExtremalFamily fam = extremal_family(p, r);
        std::uint64_t expected = 0;
        if (pr > 2) expected = (p % 2 == 1) ? (pr / p) * (p - 1) / 2 : pr / 4;
        CHECK(fam.entries.size() == expected);
        std::set<ResidueMultiset> distinct;
        for (const auto& e : fam.entries) {
            CHECK(e.multiset.size() == pr - 2);
            CHECK(avoids_target(e.multiset, pr / p, SubsetRule::IncludeEmpty));
            distinct.insert(e.multiset);
        }
        CHECK(distinct.size() == fam.entries.size());
    }
}

TEST_CASE("family equals the brute-force extremal sets for p^r in {2,...,9}") {
    for (std::uint64_t pr : {2, 3, 4, 5, 7, 8, 9}) {
        const auto f = factorize(pr);
        const std::uint64_t p = f[0].prime;
        const std::uint32_t r = f[0].exponent;
        const KappaSearch brute = kappa_avoiding(pr, pr / p, 4 * pr);
        REQUIRE(!brute.exceeds_cap);
        CHECK(brute.kappa == pr - 2);
        if (pr == 2) {
            CHECK(extremal_family(p, r).entries.empty());
            REQUIRE(brute.extremal.size() == 1);
            CHECK(brute.extremal[0].empty());
        } else {
            std::vector<ResidueMultiset> family_sets;
            for (const auto& e : extremal_family(p, r).entries)
                family_sets.push_back(e.multiset);
            CHECK(as_set(brute.extremal) == as_set(family_sets));
        }
    }
}

TEST_CASE("binomial sums of the family") {
    // identical for odd p and p^r = 2; the closed form double-counts the
    // c-range for p = 2^r with r >= 2 (each multiset is its own mirror there)
    CHECK(extremal_binomial_family_sum(2, 1) == 1);
    CHECK(extremal_binomial_closed_sum(2, 1) == 1);
    CHECK(extremal_binomial_family_sum(3, 1) == extremal_binomial_closed_sum(3, 1));
    CHECK(extremal_binomial_family_sum(5, 1) == extremal_binomial_closed_sum(5, 1));
    CHECK(extremal_binomial_family_sum(7, 1) == extremal_binomial_closed_sum(7, 1));
    CHECK(extremal_binomial_family_sum(3, 2) == extremal_binomial_closed_sum(3, 2));
    CHECK(extremal_binomial_family_sum(11, 1) == extremal_binomial_closed_sum(11, 1));
    CHECK(extremal_binomial_family_sum(13, 1) == extremal_binomial_closed_sum(13, 1));
    CHECK(2 * extremal_binomial_family_sum(2, 2) == extremal_binomial_closed_sum(2, 2));
    CHECK(2 * extremal_binomial_family_sum(2, 3) == extremal_binomial_closed_sum(2, 3));
    CHECK(2 * extremal_binomial_family_sum(2, 4) == extremal_binomial_closed_sum(2, 4));
}

TEST_CASE("heavy decomposition on worked examples") {
    ResidueMultiset m1(7, GroupLaw::Multiplicative);
    m1.add(1, 5);
    m1.add(6, 5);
    m1.add(3, 1);
    const auto d1 = decompose_heavy(m1, 7);
    CHECK(d1.heavy == std::vector<std::uint64_t>{1, 6});
    CHECK(d1.subgroup == std::vector<std::uint64_t>{1, 6});
    CHECK(d1.outside == ResidueMultiset(7, GroupLaw::Multiplicative, {3}));

    const auto d2 = decompose_heavy(ResidueMultiset(7, GroupLaw::Multiplicative, {2}), 7);
    CHECK(d2.heavy.empty());
    CHECK(d2.subgroup == std::vector<std::uint64_t>{1});
    CHECK(d2.outside == ResidueMultiset(7, GroupLaw::Multiplicative, {2}));

    const auto d3 =
        decompose_heavy(ResidueMultiset(5, GroupLaw::Multiplicative, {4, 4, 4}), 5);
    CHECK(d3.heavy == std::vector<std::uint64_t>{4});
    CHECK(d3.subgroup == std::vector<std::uint64_t>{1, 4});
    CHECK(d3.outside.empty());
}

TEST_CASE("decomposition bounds on targeted instances") {
    const GroupContext ctx72(7, 2);

    // heavy subgroup H(2) = {1, 6} plus one element of psi-image 2
    ResidueMultiset sat(7, GroupLaw::Multiplicative);
    sat.add(1, 5);
    sat.add(6, 5);
    sat.add(3, 1);
    REQUIRE(avoids_target(sat, 2, SubsetRule::IncludeEmpty));
    const auto rep = check_decomposition(sat, ctx72);
    CHECK(rep.equals_avoiding);
    CHECK(rep.outside_size == 1);  // = P - 2
    CHECK(rep.image_applicable);
    CHECK(rep.image_in_family);
    CHECK(rep.all_hold());

    // the variant with 5 in place of 3 does not avoid a = 2 at all (6*5 = 2)
    ResidueMultiset bad(7, GroupLaw::Multiplicative);
    bad.add(1, 5);
    bad.add(6, 5);
    bad.add(5, 1);
    CHECK(!avoids_target(bad, 2, SubsetRule::IncludeEmpty));
    CHECK_THROWS_AS(check_decomposition(bad, ctx72), std::invalid_argument);

    // strict subgroup case
    const auto rep2 =
        check_decomposition(ResidueMultiset(7, GroupLaw::Multiplicative, {3}), ctx72);
    CHECK(!rep2.equals_avoiding);
    CHECK(rep2.parts.subgroup == std::vector<std::uint64_t>{1});
    CHECK(rep2.all_hold());

    // empty outside part, P = 2: clause (iv) never applies
    const GroupContext ctx52(5, 2);
    const auto rep3 =
        check_decomposition(ResidueMultiset(5, GroupLaw::Multiplicative, {4, 4, 4}), ctx52);
    CHECK(rep3.equals_avoiding);
    CHECK(rep3.outside_size == 0);
    CHECK(!rep3.image_applicable);
    CHECK(rep3.all_hold());
}
