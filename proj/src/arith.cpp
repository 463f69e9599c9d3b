#include "navoid/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace navoid {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
    if (limit > kMaxLimit)
        throw ResourceError("prime table limit " + std::to_string(limit) +
                            " exceeds cap " + std::to_string(kMaxLimit));
    composite_.assign(limit + 1, false);
    if (limit >= 1) {
        composite_[0] = true;
        composite_[1] = true;
    }
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite_[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite_[i]) primes_.push_back(i);
}

namespace detail {
std::vector<std::uint64_t> seed_primes(std::uint64_t limit) {
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
    while (root * root > limit) --root;
    while ((root + 1) * (root + 1) <= limit) ++root;
    std::vector<std::uint64_t> primes;
    if (root < 2) return primes;
    std::vector<char> composite(root + 1, 0);
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) composite[j] = 1;
    }
    return primes;
}
}  // namespace detail

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 0) throw std::invalid_argument("pow_mod: zero modulus");
    if (mod == 1) return 0;
    std::uint64_t result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0 || n >= (std::uint64_t(1) << 63))
        throw std::invalid_argument("factorize: n must satisfy 1 <= n < 2^63");
    Factorization out;
    auto strip = [&](std::uint64_t p) {
        if (n % p != 0) return;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::uint64_t factorization_value(const Factorization& f) {
    std::uint64_t v = 1;
    for (const auto& [p, e] : f)
        for (std::uint32_t i = 0; i < e; ++i) v *= p;
    return v;
}

int big_omega(std::uint64_t n) {
    int total = 0;
    for (const auto& [p, e] : factorize(n)) total += static_cast<int>(e);
    return total;
}

int small_omega(std::uint64_t n) {
    return static_cast<int>(factorize(n).size());
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (const auto& [p, e] : factorize(n)) result -= result / p;
    return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
    a %= q;
    if (std::gcd(a, q) != 1)
        throw std::invalid_argument("multiplicative_order: gcd(a, q) must be 1");
    std::uint64_t t = euler_phi(q);
    for (const auto& [p, e] : factorize(t)) {
        while (t % p == 0 && pow_mod(a, t / p, q) == 1) t /= p;
    }
    return t;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > ~std::uint64_t(0))
            throw std::overflow_error("binomial: value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

double log_binomial(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_iter(double x, int level) {
    if (x <= 0.0) throw std::invalid_argument("log_iter: x must be positive");
    if (level < 1) throw std::invalid_argument("log_iter: level must be >= 1");
    double v = x;
    for (int i = 0; i < level; ++i) v = std::max(std::log(v), 1.0);
    return v;
}

double gamma_fn(double s) {
    if (s <= 0.0) throw std::invalid_argument("gamma_fn: s must be positive");
    return std::tgamma(s);
}

}  // namespace navoid
