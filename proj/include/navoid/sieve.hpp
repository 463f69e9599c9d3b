#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "navoid/arith.hpp"

namespace navoid {

// One exact counting result.
struct CountRecord {
    std::uint64_t x = 0;
    std::uint64_t q = 0;
    std::uint64_t a = 0;
    std::uint64_t count = 0;
    std::string method;  // "oracle" | "sieve" | "dfs" | "closed"
    double elapsed_seconds = 0.0;
};

struct SieveOptions {
    std::uint64_t segment_width = std::uint64_t(1) << 22;
    unsigned threads = 0;  // 0 = hardware concurrency
    std::uint64_t max_x = 100'000'000'000ull;
};

inline constexpr std::uint64_t kOracleCap = 10'000'000;
inline constexpr std::uint64_t kLandauCap = 100'000'000;

// True iff no divisor d > 1 of n satisfies d = a (mod q).
bool avoids_divisor_class(std::uint64_t n, std::uint64_t q, std::uint64_t a);

// Per-integer divisor scan over [1, x]; the reference count. Capped at 1e7.
CountRecord navoid_oracle(std::uint64_t x, std::uint64_t q, std::uint64_t a);

// Same count restricted to n not divisible by q.
std::uint64_t navoid_oracle_coprime(std::uint64_t x, std::uint64_t q, std::uint64_t a);

// Segmented marking sieve: marks every multiple of every d = a (mod q),
// 1 < d <= x, and counts the unmarked integers. Requires 1 <= a < q.
CountRecord navoid_sieve(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                         const SieveOptions& opt = {});

// Exact closed forms for a = 0 (non-multiples of q) and (q, a) = (2, 1)
// (powers of two).
CountRecord navoid_closed(std::uint64_t x, std::uint64_t q, std::uint64_t a);

enum class CountMethod { Auto, Oracle, Sieve };

// Dispatch: the two closed-form families go through navoid_closed under
// Auto/Sieve; everything else uses the requested method.
CountRecord navoid_count(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                         CountMethod method = CountMethod::Auto,
                         const SieveOptions& opt = {});

// Count of n <= x with Omega(n) = k whose prime factors all lie in the given
// reduced residue classes mod m. DFS over nondecreasing prime tuples.
CountRecord count_restricted_k(std::uint64_t x, std::uint64_t m,
                               const std::vector<std::uint64_t>& classes,
                               std::uint32_t k);

// Same without the Omega restriction (n = 1 included).
CountRecord count_restricted(std::uint64_t x, std::uint64_t m,
                             const std::vector<std::uint64_t>& classes);

enum class FactorCountMode { WithMultiplicity, Distinct };

// Count of n <= x with Omega(n) = k (or omega(n) = k). Additive sieve, cap 1e8.
CountRecord landau_count(std::uint64_t x, std::uint32_t k, FactorCountMode mode);

}  // namespace navoid
