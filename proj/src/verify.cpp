#include "navoid/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "navoid/multiset.hpp"

namespace navoid {

namespace {

std::uint64_t pow_u64(std::uint64_t p, std::uint32_t r) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < r; ++i) v *= p;
    return v;
}

// Prime powers p^r in (2, max], smallest first.
std::vector<std::pair<std::uint64_t, std::uint32_t>> prime_powers_up_to(std::uint64_t max) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t n = 2; n <= max; ++n) {
        const auto f = factorize(n);
        if (f.size() == 1) out.push_back({f[0].prime, f[0].exponent});
    }
    return out;
}

std::set<ResidueMultiset> as_set(const std::vector<ResidueMultiset>& v) {
    return {v.begin(), v.end()};
}

std::string join_failures(const std::vector<std::string>& fails, std::size_t limit = 3) {
    std::string out;
    for (std::size_t i = 0; i < fails.size() && i < limit; ++i) {
        if (!out.empty()) out += "; ";
        out += fails[i];
    }
    if (fails.size() > limit) out += "; ...";
    return out;
}

}  // namespace

std::vector<CheckResult> verify_unit_kappa(std::uint64_t max_m) {
    std::vector<CheckResult> results;
    for (std::uint64_t m = 2; m <= max_m; ++m) {
        const KappaZero closed = kappa_cyclic_zero(m);
        const KappaSearch brute = kappa_zero_bruteforce(m, m + 1);
        CheckResult r;
        r.name = "zero-sum-kappa m=" + std::to_string(m);
        const bool kappa_ok = !brute.exceeds_cap && brute.kappa == m - 1 &&
                              closed.kappa == m - 1;
        const bool extremal_ok = as_set(brute.extremal) == as_set(closed.extremal);
        r.pass = kappa_ok && extremal_ok;
        std::ostringstream d;
        d << "kappa=" << brute.kappa << " extremal=" << brute.extremal.size()
          << " phi(m)=" << euler_phi(m);
        if (!extremal_ok) d << " extremal sets differ from unit multiples";
        r.detail = d.str();
        results.push_back(std::move(r));
    }
    return results;
}

std::vector<CheckResult> verify_prime_power_kappa(std::uint64_t max_prime_power) {
    std::vector<CheckResult> results;
    std::ostringstream table;
    bool table_ok = true;
    for (const auto& [p, r] : prime_powers_up_to(max_prime_power)) {
        const std::uint64_t pr = pow_u64(p, r);
        const std::uint64_t a = pr / p;  // p^(r-1)
        const KappaSearch brute = kappa_avoiding(pr, a, 4 * pr);
        const ExtremalFamily fam = extremal_family(p, r);
        CheckResult res;
        res.name = "avoiding-kappa p^r=" + std::to_string(pr);
        bool ok = !brute.exceeds_cap && brute.kappa == pr - 2;
        if (pr == 2) {
            // lone maximal multiset is empty; the family lists no entries
            ok = ok && fam.entries.empty() && brute.extremal.size() == 1 &&
                 brute.extremal[0].empty();
        } else {
            std::vector<ResidueMultiset> family_sets;
            family_sets.reserve(fam.entries.size());
            for (const auto& e : fam.entries) family_sets.push_back(e.multiset);
            ok = ok && as_set(brute.extremal) == as_set(family_sets);
        }
        res.pass = ok;
        std::ostringstream d;
        d << "kappa=" << brute.kappa << " extremal=" << brute.extremal.size()
          << " family=" << fam.entries.size();
        res.detail = d.str();
        if (!table.str().empty()) table << " ";
        table << pr << ":" << brute.kappa;
        table_ok = table_ok && ok;
        results.push_back(std::move(res));
    }
    results.push_back({"avoiding-kappa table", table_ok, table.str()});

    if (max_prime_power >= 9) {
        const KappaSearch inf = kappa_avoiding(9, 1, 36);
        results.push_back({"avoiding-kappa infinite case m=9 a=1", inf.exceeds_cap,
                           inf.exceeds_cap ? "witness of size 36 found (cap 4m)"
                                           : "unexpectedly finite"});
    }
    return results;
}

std::vector<CheckResult> verify_avoider_construction(std::uint64_t max_prime_power) {
    std::vector<std::string> avoid_fails, pair_fails;
    std::uint64_t cases = 0;
    for (const auto& [p, r] : prime_powers_up_to(max_prime_power)) {
        const std::uint64_t pr = pow_u64(p, r);
        const std::uint64_t prm1 = pr / p;
        for (std::uint64_t mult = 1; mult < p; ++mult) {
            const std::uint64_t a = prm1 * mult;
            for (std::uint64_t b = 1; b < pr; ++b) {
                if (b % p == 0) continue;
                ++cases;
                const ResidueMultiset m = extremal_avoider(p, r, a, b);
                if (m.size() != pr - 2 || !avoids_target(m, a, SubsetRule::IncludeEmpty))
                    avoid_fails.push_back("p^r=" + std::to_string(pr) + " a=" +
                                          std::to_string(a) + " b=" + std::to_string(b));
                if (!(m == extremal_avoider(p, r, a, pr - b)))
                    pair_fails.push_back("p^r=" + std::to_string(pr) + " a=" +
                                         std::to_string(a) + " b=" + std::to_string(b));
            }
        }
    }
    std::vector<CheckResult> results;
    results.push_back({"avoider-construction avoids target", avoid_fails.empty(),
                       avoid_fails.empty() ? std::to_string(cases) + " cases"
                                           : join_failures(avoid_fails)});
    results.push_back({"avoider-construction b/-b pairing", pair_fails.empty(),
                       pair_fails.empty() ? std::to_string(cases) + " cases"
                                          : join_failures(pair_fails)});
    return results;
}

std::vector<CheckResult> verify_family_counts(std::uint64_t max_prime_power) {
    std::vector<CheckResult> results;
    for (const auto& [p, r] : prime_powers_up_to(max_prime_power)) {
        const std::uint64_t pr = pow_u64(p, r);
        const ExtremalFamily fam = extremal_family(p, r);
        std::uint64_t expected;
        if (pr == 2)
            expected = 0;
        else if (p % 2 == 1)
            expected = (pr / p) * (p - 1) / 2;
        else
            expected = pr / 4;
        const bool count_ok = fam.entries.size() == expected;

        std::set<ResidueMultiset> distinct;
        for (const auto& e : fam.entries) distinct.insert(e.multiset);
        const bool distinct_ok = distinct.size() == fam.entries.size();

        const std::uint64_t lhs = extremal_binomial_family_sum(p, r);
        const std::uint64_t rhs = extremal_binomial_closed_sum(p, r);
        std::ostringstream d;
        d << "entries=" << fam.entries.size() << " expected=" << expected
          << " family_binomial_sum=" << lhs << " closed_sum=" << rhs;
        results.push_back({"extremal-family count p^r=" + std::to_string(pr),
                           count_ok && distinct_ok, d.str()});
        results.push_back({"extremal-family binomial identity p^r=" + std::to_string(pr),
                           lhs == rhs, d.str()});
    }
    return results;
}

std::vector<CheckResult> verify_subgroup_structure(std::uint64_t max_q) {
    std::vector<std::string> index_fails, largest_fails;
    std::uint64_t cases = 0;
    for (std::uint64_t q = 3; q <= max_q; q += 2) {
        if (!is_prime(q)) continue;
        for (std::uint64_t a = 2; a < q; ++a) {
            ++cases;
            const PrimePower pp = subgroup_index(q, a);
            const auto h = avoiding_subgroup(q, a);
            std::uint64_t h_size = 0;
            for (std::uint64_t x = 1; x < q; ++x) h_size += h[x];
            if (pp.value * h_size != q - 1 || h[a % q] || !h[1])
                index_fails.push_back("q=" + std::to_string(q) + " a=" + std::to_string(a));

            // largest subgroup avoiding a, by scanning every subgroup order
            std::uint64_t largest = 0;
            for (std::uint64_t d = 1; d <= q - 1; ++d) {
                if ((q - 1) % d != 0) continue;
                // unique subgroup of order d: solutions of x^d = 1
                std::uint64_t size = 0;
                bool contains_a = false;
                for (std::uint64_t x = 1; x < q; ++x) {
                    if (pow_mod(x, d, q) == 1) {
                        ++size;
                        if (x == a) contains_a = true;
                    }
                }
                if (!contains_a) largest = std::max(largest, size);
            }
            if (largest != h_size)
                largest_fails.push_back("q=" + std::to_string(q) + " a=" + std::to_string(a));
        }
    }
    std::vector<CheckResult> results;
    results.push_back({"subgroup index identity", index_fails.empty(),
                       index_fails.empty() ? std::to_string(cases) + " cases"
                                           : join_failures(index_fails)});
    results.push_back({"subgroup maximal among avoiders", largest_fails.empty(),
                       largest_fails.empty() ? std::to_string(cases) + " cases"
                                             : join_failures(largest_fails)});
    return results;
}

std::vector<CheckResult> verify_aligned_psi(std::uint64_t max_q, std::uint64_t hom_max_q) {
    std::vector<std::string> image_fails, hom_fails, coset_fails;
    std::uint64_t image_cases = 0, hom_cases = 0, coset_cases = 0;
    for (std::uint64_t q = 3; q <= max_q; q += 2) {
        if (!is_prime(q)) continue;
        for (std::uint64_t a = 2; a < q; ++a) {
            const GroupContext ctx(q, a);
            const PrimePower pp = ctx.index();
            ++image_cases;
            std::uint64_t target = 1;
            for (std::uint32_t i = 0; i + 1 < pp.r; ++i) target *= pp.p;
            if (ctx.psi(a) != target || ctx.psi(1) != 0)
                image_fails.push_back("q=" + std::to_string(q) + " a=" + std::to_string(a));
            for (std::uint64_t h : ctx.subgroup())
                if (ctx.psi(h) != 0)
                    image_fails.push_back("kernel q=" + std::to_string(q) + " a=" +
                                          std::to_string(a) + " h=" + std::to_string(h));

            if (q <= hom_max_q) {
                for (std::uint64_t u = 1; u < q; ++u)
                    for (std::uint64_t v = 1; v < q; ++v) {
                        ++hom_cases;
                        const std::uint64_t lhs = ctx.psi(u * v % q);
                        const std::uint64_t rhs = (ctx.psi(u) + ctx.psi(v)) % pp.value;
                        if (lhs != rhs)
                            hom_fails.push_back("q=" + std::to_string(q) + " a=" +
                                                std::to_string(a) + " u=" + std::to_string(u) +
                                                " v=" + std::to_string(v));
                    }
            }

            if (q <= hom_max_q && pp.value >= 3) {
                for (std::uint64_t c = 1; c < pp.value; ++c) {
                    if (c % pp.p == 0) continue;
                    ++coset_cases;
                    const auto pair = ctx.coset_pair(c);
                    const std::uint64_t hsz = ctx.subgroup().size();
                    bool ok = pair.plus.size() == hsz && pair.minus.size() == hsz;
                    if ((2 * c) % pp.value != 0) {
                        for (std::uint64_t e : pair.plus)
                            ok = ok && !ctx.in_subgroup(e) &&
                                 !std::binary_search(pair.minus.begin(), pair.minus.end(), e);
                        for (std::uint64_t e : pair.minus) ok = ok && !ctx.in_subgroup(e);
                    }
                    if (!ok)
                        coset_fails.push_back("q=" + std::to_string(q) + " a=" +
                                              std::to_string(a) + " c=" + std::to_string(c));
                }
            }
        }
    }
    std::vector<CheckResult> results;
    results.push_back({"psi image of a and kernel", image_fails.empty(),
                       image_fails.empty() ? std::to_string(image_cases) + " contexts"
                                           : join_failures(image_fails)});
    results.push_back({"psi additivity", hom_fails.empty(),
                       hom_fails.empty() ? std::to_string(hom_cases) + " pairs"
                                         : join_failures(hom_fails)});
    results.push_back({"coset pair size and disjointness", coset_fails.empty(),
                       coset_fails.empty() ? std::to_string(coset_cases) + " cases"
                                           : join_failures(coset_fails)});
    return results;
}

std::vector<CheckResult> verify_dp_equivalence(std::uint64_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> fails;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t m = 2 + rng() % 10;   // modulus 2..11
        const std::uint64_t k = 1 + rng() % 12;   // size 1..12
        ResidueMultiset ms(m, GroupLaw::Additive);
        std::vector<std::uint64_t> elems;
        for (std::uint64_t i = 0; i < k; ++i) {
            const std::uint64_t e = 1 + rng() % (m - 1);
            elems.push_back(e);
            ms.add(e);
        }
        const std::uint64_t target = rng() % m;
        const bool empty_in = rng() % 2 == 0;

        // explicit 2^k enumeration
        bool hit = empty_in && target == 0;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k) && !hit; ++mask) {
            std::uint64_t sum = 0;
            for (std::uint64_t i = 0; i < k; ++i)
                if (mask & (std::uint64_t(1) << i)) sum = (sum + elems[i]) % m;
            hit = sum == target;
        }
        const bool dp = avoids_target(
            ms, target, empty_in ? SubsetRule::IncludeEmpty : SubsetRule::NonemptyOnly);
        if (dp != !hit)
            fails.push_back("m=" + std::to_string(m) + " " + ms.to_string() +
                            " target=" + std::to_string(target));
    }
    return {{"subset DP vs explicit enumeration", fails.empty(),
             fails.empty() ? std::to_string(trials) + " trials" : join_failures(fails)}};
}

std::vector<CheckResult> verify_decomposition_bounds(std::uint64_t trials,
                                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> fails;
    std::uint64_t checked = 0, saturating = 0;
    for (std::uint64_t q : {5ull, 7ull, 11ull, 13ull}) {
        for (std::uint64_t a = 2; a < q; ++a) {
            const GroupContext ctx(q, a);
            const PrimePower pp = ctx.index();

            // saturating instances: all of H(a) at the heavy threshold plus a
            // pullback of each extremal image through a coset section
            if (pp.value >= 3) {
                const ExtremalFamily fam = extremal_family(pp.p, pp.r);
                for (const auto& entry : fam.entries) {
                    ResidueMultiset m(q, GroupLaw::Multiplicative);
                    for (std::uint64_t h : ctx.subgroup()) m.add(h, q - 2);
                    const auto pair = ctx.coset_pair(entry.c % pp.value);
                    const auto& h_members = ctx.subgroup();
                    for (std::uint64_t i = 0; i < entry.eta; ++i)
                        m.add(pair.plus[rng() % h_members.size()]);
                    for (std::uint64_t i = 0; i < pp.value - 2 - entry.eta; ++i)
                        m.add(pair.minus[rng() % h_members.size()]);
                    const auto rep = check_decomposition(m, ctx);
                    ++checked;
                    if (rep.image_applicable) ++saturating;
                    if (!rep.all_hold() || !rep.image_applicable || !rep.equals_avoiding)
                        fails.push_back("saturating q=" + std::to_string(q) + " a=" +
                                        std::to_string(a) + " " + m.to_string());
                }
            }

            // random multisets filtered to the avoiding ones
            for (std::uint64_t t = 0; t < trials; ++t) {
                ResidueMultiset m(q, GroupLaw::Multiplicative);
                const std::uint64_t k = 1 + rng() % (3 * (q - 2));
                for (std::uint64_t i = 0; i < k; ++i) m.add(1 + rng() % (q - 1));
                if (!avoids_target(m, a, SubsetRule::IncludeEmpty)) continue;
                const auto rep = check_decomposition(m, ctx);
                ++checked;
                if (!rep.all_hold())
                    fails.push_back("random q=" + std::to_string(q) + " a=" +
                                    std::to_string(a) + " " + m.to_string());
            }
        }
    }
    std::ostringstream d;
    d << checked << " avoiding multisets, " << saturating << " saturating (iv)";
    return {{"decomposition bounds", fails.empty(),
             fails.empty() ? d.str() : join_failures(fails)}};
}

std::vector<CheckResult> verify_all(const VerifyCaps& caps) {
    std::vector<CheckResult> all;
    auto append = [&](std::vector<CheckResult> v) {
        for (auto& r : v) all.push_back(std::move(r));
    };
    append(verify_unit_kappa(caps.unit_kappa_max_m));
    append(verify_prime_power_kappa(caps.prime_power_max));
    append(verify_avoider_construction(caps.construction_max));
    append(verify_family_counts(caps.construction_max));
    append(verify_subgroup_structure(caps.subgroup_max_q));
    append(verify_aligned_psi(caps.subgroup_max_q, caps.psi_hom_max_q));
    append(verify_dp_equivalence(caps.dp_trials, caps.seed));
    append(verify_decomposition_bounds(caps.decomposition_trials, caps.seed));
    return all;
}

}  // namespace navoid
