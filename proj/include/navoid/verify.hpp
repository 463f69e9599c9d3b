#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace navoid {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // kappa tables, counterexamples, case counts
};

struct VerifyCaps {
    std::uint64_t unit_kappa_max_m = 12;       // exhaustive zero-sum sweep
    std::uint64_t prime_power_max = 9;         // exhaustive avoiding-kappa sweep
    std::uint64_t construction_max = 16;       // avoider construction + pairing
    std::uint64_t subgroup_max_q = 200;        // index/subgroup identities
    std::uint64_t psi_hom_max_q = 50;          // psi additivity, all pairs
    std::uint64_t dp_trials = 10000;           // DP vs explicit enumeration
    std::uint64_t decomposition_trials = 200;  // random avoiding multisets per (q, a)
    std::uint64_t seed = 0x5eed;
};

// Exhaustive check that the zero-sum kappa of Z/mZ is m-1 with exactly the
// unit-multiple extremal multisets, for 2 <= m <= max_m.
std::vector<CheckResult> verify_unit_kappa(std::uint64_t max_m);

// Exhaustive check that kappa(Z/p^rZ, p^(r-1)) = p^r - 2 and that the
// extremal multisets are exactly the canonical family, for p^r <= max.
// Also reports the kappa table and the exceeds-cap behaviour of (9, 1).
std::vector<CheckResult> verify_prime_power_kappa(std::uint64_t max_prime_power);

// The two-block construction avoids its target for every valid (p, r, a, b)
// with p^r <= max, and building from b and from -b gives the same multiset.
std::vector<CheckResult> verify_avoider_construction(std::uint64_t max_prime_power);

// Binomial count identities of the extremal family for p^r <= max.
std::vector<CheckResult> verify_family_counts(std::uint64_t max_prime_power);

// subgroup_index * |H(a)| = q - 1, H(a) is the largest subgroup avoiding a
// (cross-checked against every subgroup of the cyclic group), for all odd
// primes q <= max_q and all 1 < a < q.
std::vector<CheckResult> verify_subgroup_structure(std::uint64_t max_q);

// psi(a) = p^(r-1) for q <= max_q; psi is additive on all pairs for
// q <= hom_max_q; coset pairs have the right size and disjointness.
std::vector<CheckResult> verify_aligned_psi(std::uint64_t max_q, std::uint64_t hom_max_q);

// Reachable-set DP agrees with explicit 2^k subset enumeration on random
// small multisets.
std::vector<CheckResult> verify_dp_equivalence(std::uint64_t trials, std::uint64_t seed);

// Decomposition bounds hold on constructed and random multisets that avoid a
// multiplicatively, including saturating instances exercising the extremal
// image clause.
std::vector<CheckResult> verify_decomposition_bounds(std::uint64_t trials,
                                                     std::uint64_t seed);

std::vector<CheckResult> verify_all(const VerifyCaps& caps = {});

}  // namespace navoid
