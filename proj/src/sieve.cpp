#include "navoid/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace navoid {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void validate_progression(std::uint64_t q, std::uint64_t a) {
    if (q < 2) throw std::invalid_argument("modulus q must be >= 2");
    if (a >= q) throw std::invalid_argument("residue a must satisfy 0 <= a < q");
}

}  // namespace

bool avoids_divisor_class(std::uint64_t n, std::uint64_t q, std::uint64_t a) {
    if (n > 1 && n % q == a) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        if (d % q == a || (n / d) % q == a) return false;
    }
    return true;
}

CountRecord navoid_oracle(std::uint64_t x, std::uint64_t q, std::uint64_t a) {
    validate_progression(q, a);
    if (x < 1) throw std::invalid_argument("x must be >= 1");
    if (x > kOracleCap)
        throw ResourceError("oracle capped at x <= " + std::to_string(kOracleCap) +
                            "; use the sieve");
    const auto t0 = Clock::now();
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (avoids_divisor_class(n, q, a)) ++count;
    return {x, q, a, count, "oracle", seconds_since(t0)};
}

std::uint64_t navoid_oracle_coprime(std::uint64_t x, std::uint64_t q, std::uint64_t a) {
    validate_progression(q, a);
    if (x > kOracleCap)
        throw ResourceError("oracle capped at x <= " + std::to_string(kOracleCap));
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (n % q != 0 && avoids_divisor_class(n, q, a)) ++count;
    return count;
}

namespace {

// Count of unmarked integers in [lo, hi] after marking the multiples of every
// divisor d = a (mod q), 1 < d <= x. Divisors up to `width` are walked
// directly; larger divisors d are reached through their multiplier j, so each
// (j, d) pair with j*d in the segment costs O(1).
std::uint64_t sieve_segment(std::uint64_t lo, std::uint64_t hi, std::uint64_t q,
                            std::uint64_t a, std::uint64_t width,
                            std::vector<std::uint8_t>& buf) {
    buf.assign(hi - lo + 1, 0);
    const std::uint64_t first_div = (a > 1) ? a : a + q;
    for (std::uint64_t d = first_div; d <= std::min(width, hi); d += q) {
        std::uint64_t start = std::max(d, ((lo + d - 1) / d) * d);
        for (std::uint64_t m = start; m <= hi; m += d) buf[m - lo] = 1;
    }
    for (std::uint64_t j = 1; j <= hi / (width + 1); ++j) {
        const std::uint64_t dlo = std::max(width + 1, (lo + j - 1) / j);
        const std::uint64_t dhi = hi / j;
        if (dlo > dhi) continue;
        std::uint64_t d = dlo + (a + q - dlo % q) % q;
        for (; d <= dhi; d += q) buf[j * d - lo] = 1;
    }
    return static_cast<std::uint64_t>(
        std::count(buf.begin(), buf.end(), std::uint8_t(0)));
}

}  // namespace

CountRecord navoid_sieve(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                         const SieveOptions& opt) {
    validate_progression(q, a);
    if (a == 0) throw std::invalid_argument("sieve requires 1 <= a < q; a = 0 has a closed form");
    if (q != 2 && (!is_prime(q) || q % 2 == 0))
        throw std::invalid_argument("sieve requires q = 2 or an odd prime");
    if (x < 1) throw std::invalid_argument("x must be >= 1");
    if (x > opt.max_x)
        throw ResourceError("sieve capped at x <= " + std::to_string(opt.max_x));

    const auto t0 = Clock::now();
    const std::uint64_t width = std::max<std::uint64_t>(opt.segment_width, 1 << 10);
    const std::uint64_t nseg = (x + width - 1) / width;
    unsigned threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, nseg));

    std::atomic<std::uint64_t> next{0};
    std::vector<std::uint64_t> partial(threads, 0);
    auto worker = [&](unsigned tid) {
        std::vector<std::uint8_t> buf;
        for (;;) {
            const std::uint64_t k = next.fetch_add(1);
            if (k >= nseg) break;
            const std::uint64_t lo = k * width + 1;
            const std::uint64_t hi = std::min(x, (k + 1) * width);
            partial[tid] += sieve_segment(lo, hi, q, a, width, buf);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    std::uint64_t count = 0;
    for (auto c : partial) count += c;
    return {x, q, a, count, "sieve", seconds_since(t0)};
}

CountRecord navoid_closed(std::uint64_t x, std::uint64_t q, std::uint64_t a) {
    validate_progression(q, a);
    if (x < 1) throw std::invalid_argument("x must be >= 1");
    const auto t0 = Clock::now();
    std::uint64_t count;
    if (a == 0) {
        count = x - x / q;
    } else if (q == 2 && a == 1) {
        count = 0;  // 1 and the powers of two up to x
        for (std::uint64_t p = 1; p <= x; p *= 2) {
            ++count;
            if (p > x / 2) break;
        }
    } else {
        throw std::invalid_argument("no closed form for these parameters");
    }
    return {x, q, a, count, "closed", seconds_since(t0)};
}

CountRecord navoid_count(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                         CountMethod method, const SieveOptions& opt) {
    validate_progression(q, a);
    if (method == CountMethod::Oracle) return navoid_oracle(x, q, a);
    if (a == 0 || (q == 2 && a == 1)) return navoid_closed(x, q, a);
    return navoid_sieve(x, q, a, opt);
}

namespace {

std::vector<std::uint64_t> allowed_primes(std::uint64_t x, std::uint64_t m,
                                          const std::vector<std::uint64_t>& classes) {
    if (classes.empty()) throw std::invalid_argument("class set must be nonempty");
    std::vector<char> allowed(m, 0);
    for (std::uint64_t c : classes) {
        if (c >= m || std::gcd(c, m) != 1)
            throw std::invalid_argument("classes must be reduced residues mod m");
        allowed[c] = 1;
    }
    std::vector<std::uint64_t> out;
    for_each_prime(x, [&](std::uint64_t p) {
        if (allowed[p % m]) out.push_back(p);
    });
    return out;
}

std::uint64_t dfs_omega_k(const std::vector<std::uint64_t>& ps, std::size_t i0,
                          std::uint32_t k, std::uint64_t limit) {
    if (k == 0) return 1;
    std::uint64_t total = 0;
    for (std::size_t i = i0; i < ps.size(); ++i) {
        // need ps[i]^k <= limit for a nondecreasing completion
        std::uint64_t room = limit;
        bool fits = true;
        for (std::uint32_t j = 0; j < k; ++j) {
            if (room < ps[i]) {
                fits = false;
                break;
            }
            room /= ps[i];
        }
        if (!fits) break;
        total += dfs_omega_k(ps, i, k - 1, limit / ps[i]);
    }
    return total;
}

std::uint64_t dfs_all(const std::vector<std::uint64_t>& ps, std::size_t i0,
                      std::uint64_t limit) {
    std::uint64_t total = 1;
    for (std::size_t i = i0; i < ps.size() && ps[i] <= limit; ++i)
        total += dfs_all(ps, i, limit / ps[i]);
    return total;
}

}  // namespace

CountRecord count_restricted_k(std::uint64_t x, std::uint64_t m,
                               const std::vector<std::uint64_t>& classes,
                               std::uint32_t k) {
    if (x < 1) throw std::invalid_argument("x must be >= 1");
    const auto t0 = Clock::now();
    const auto ps = allowed_primes(x, m, classes);
    const std::uint64_t count = dfs_omega_k(ps, 0, k, x);
    return {x, m, 0, count, "dfs", seconds_since(t0)};
}

CountRecord count_restricted(std::uint64_t x, std::uint64_t m,
                             const std::vector<std::uint64_t>& classes) {
    if (x < 1) throw std::invalid_argument("x must be >= 1");
    const auto t0 = Clock::now();
    const auto ps = allowed_primes(x, m, classes);
    const std::uint64_t count = dfs_all(ps, 0, x);
    return {x, m, 0, count, "dfs", seconds_since(t0)};
}

CountRecord landau_count(std::uint64_t x, std::uint32_t k, FactorCountMode mode) {
    if (x < 1) throw std::invalid_argument("x must be >= 1");
    if (x > kLandauCap)
        throw ResourceError("landau_count capped at x <= " + std::to_string(kLandauCap));
    const auto t0 = Clock::now();
    std::vector<std::uint8_t> factors(x + 1, 0);
    for_each_prime(x, [&](std::uint64_t p) {
        if (mode == FactorCountMode::WithMultiplicity) {
            for (std::uint64_t pw = p; pw <= x; pw = (pw > x / p) ? x + 1 : pw * p)
                for (std::uint64_t n = pw; n <= x; n += pw) ++factors[n];
        } else {
            for (std::uint64_t n = p; n <= x; n += p) ++factors[n];
        }
    });
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (factors[n] == k) ++count;
    return {x, 0, 0, count, "dfs", seconds_since(t0)};
}

}  // namespace navoid
