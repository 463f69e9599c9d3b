#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace navoid {

// Thrown when an operation would exceed a documented memory or size cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrimeFactor {
    std::uint64_t prime;
    std::uint32_t exponent;
    bool operator==(const PrimeFactor&) const = default;
};

// Prime-power decomposition with strictly increasing primes; empty for n = 1.
using Factorization = std::vector<PrimeFactor>;

// Sieve of Eratosthenes up to `limit`, with membership and enumeration access.
class PrimeTable {
public:
    static constexpr std::uint64_t kMaxLimit = std::uint64_t(1) << 31;

    explicit PrimeTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    bool is_prime(std::uint64_t n) const {
        return n >= 2 && n <= limit_ && !composite_[n];
    }
    const std::vector<std::uint64_t>& primes() const { return primes_; }

private:
    std::uint64_t limit_;
    std::vector<bool> composite_;
    std::vector<std::uint64_t> primes_;
};

inline PrimeTable primes_up_to(std::uint64_t y) { return PrimeTable(y); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Deterministic primality by trial division (intended for n up to ~1e12).
bool is_prime(std::uint64_t n);

// Trial division with a 2,3 wheel; requires 1 <= n < 2^63.
Factorization factorize(std::uint64_t n);

// Product of prime^exponent; inverse of factorize.
std::uint64_t factorization_value(const Factorization& f);

int big_omega(std::uint64_t n);
int small_omega(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// Least t >= 1 with a^t = 1 (mod q); requires gcd(a, q) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q);

// Exact binomial coefficient; throws std::overflow_error if it exceeds 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// log C(n, k) via lgamma, for sums too large for exact arithmetic.
double log_binomial(double n, double k);

// Clamped iterated logarithm: level 1 gives max(ln x, 1), level l applies
// the level-1 map to the level-(l-1) value. Always >= 1.
double log_iter(double x, int level);

// Gamma function on s > 0.
double gamma_fn(double s);

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline double euler_gamma() { return kEulerGamma; }

namespace detail {
// Base primes up to sqrt(limit) for segmented enumeration.
std::vector<std::uint64_t> seed_primes(std::uint64_t limit);
}

// Calls fn(p) for every prime p <= limit in increasing order, in segments,
// without materializing the full prime list.
template <class Fn>
void for_each_prime(std::uint64_t limit, Fn&& fn) {
    if (limit < 2) return;
    const auto base = detail::seed_primes(limit);
    for (std::uint64_t p : base) fn(p);
    const std::uint64_t seg = std::uint64_t(1) << 20;
    std::uint64_t lo = base.empty() ? 2 : base.back() + 1;
    std::vector<char> mark;
    while (lo <= limit) {
        const std::uint64_t hi = std::min(limit, lo + seg - 1);
        mark.assign(hi - lo + 1, 0);
        for (std::uint64_t p : base) {
            if (p * p > hi) break;
            std::uint64_t start = ((lo + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            for (std::uint64_t m = start; m <= hi; m += p) mark[m - lo] = 1;
        }
        for (std::uint64_t n = lo; n <= hi; ++n)
            if (!mark[n - lo]) fn(n);
        lo = hi + 1;
    }
}

}  // namespace navoid
