#include "navoid/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace navoid {

namespace {

void validate_pair(std::uint64_t q, std::uint64_t a) {
    if (q < 3 || !is_prime(q) || q % 2 == 0)
        throw std::invalid_argument("q must be an odd prime");
    if (a <= 1 || a >= q)
        throw std::invalid_argument("a must satisfy 1 < a < q");
}

}  // namespace

PrimePower subgroup_index(std::uint64_t q, std::uint64_t a) {
    validate_pair(q, a);
    const std::uint64_t order = multiplicative_order(a, q);
    const Factorization group = factorize(q - 1);
    PrimePower best;
    for (const auto& [p, beta] : factorize(order)) {
        std::uint32_t alpha = 0;
        for (const auto& [gp, ge] : group)
            if (gp == p) alpha = ge;
        const std::uint32_t r = alpha - beta + 1;
        std::uint64_t value = 1;
        for (std::uint32_t i = 0; i < r; ++i) value *= p;
        if (best.value == 0 || value < best.value) best = {p, r, value};
    }
    return best;
}

std::vector<std::uint8_t> avoiding_subgroup(std::uint64_t q, std::uint64_t a) {
    const PrimePower pp = subgroup_index(q, a);
    const std::uint64_t exponent = (q - 1) / pp.value;
    std::vector<std::uint8_t> table(q, 0);
    for (std::uint64_t x = 1; x < q; ++x)
        if (pow_mod(x, exponent, q) == 1) table[x] = 1;
    return table;
}

GroupContext::GroupContext(std::uint64_t q, std::uint64_t a) : q_(q), a_(a) {
    validate_pair(q, a);
    if (q > kMaxModulus)
        throw ResourceError("GroupContext capped at q <= " + std::to_string(kMaxModulus));
    order_ = multiplicative_order(a, q);
    index_ = subgroup_index(q, a);

    in_h_.assign(q, 0);
    const std::uint64_t h_order = (q - 1) / index_.value;
    for (std::uint64_t x = 1; x < q; ++x)
        if (pow_mod(x, h_order, q) == 1) in_h_[x] = 1;
    for (std::uint64_t x = 1; x < q; ++x)
        if (in_h_[x]) h_members_.push_back(x);

    // Discrete logs base the smallest generator g0; any other generator g = g0^e
    // (gcd(e, q-1) = 1) has dlog_g(x) = dlog_g0(x) * e^{-1} mod (q-1).
    std::uint64_t g0 = 0;
    std::vector<std::uint32_t> dlog0(q, 0);
    for (std::uint64_t g = 2; g < q; ++g) {
        if (multiplicative_order(g, q) == q - 1) {
            g0 = g;
            break;
        }
    }
    std::uint64_t acc = 1;
    for (std::uint64_t e = 0; e < q - 1; ++e) {
        dlog0[acc] = static_cast<std::uint32_t>(e);
        acc = mul_mod(acc, g0, q);
    }

    // Aligned generator: smallest generator g with dlog_g(a) = p^(r-1) mod p^r.
    const std::uint64_t pr = index_.value;
    std::uint64_t target = 1;
    for (std::uint32_t i = 0; i + 1 < index_.r; ++i) target *= index_.p;
    generator_ = 0;
    for (std::uint64_t g = 2; g < q; ++g) {
        const std::uint64_t e = dlog0[g];
        if (std::gcd(e, q - 1) != 1) continue;  // not a generator
        // dlog_g(a) = dlog0(a) / e mod (q-1)
        std::uint64_t inv = 1, t = e % (q - 1);
        // inverse via extended Euclid
        {
            std::int64_t r0 = static_cast<std::int64_t>(q - 1), r1 = static_cast<std::int64_t>(t);
            std::int64_t s0 = 0, s1 = 1;
            while (r1 != 0) {
                std::int64_t k = r0 / r1;
                std::int64_t r2 = r0 - k * r1;
                std::int64_t s2 = s0 - k * s1;
                r0 = r1; r1 = r2; s0 = s1; s1 = s2;
            }
            inv = static_cast<std::uint64_t>((s0 % static_cast<std::int64_t>(q - 1) +
                                              static_cast<std::int64_t>(q - 1)) %
                                             static_cast<std::int64_t>(q - 1));
        }
        const std::uint64_t dlog_a = mul_mod(dlog0[a], inv, q - 1);
        if (dlog_a % pr == target) {
            generator_ = g;
            break;
        }
    }
    if (generator_ == 0)
        throw std::logic_error("no aligned generator found");  // cannot happen

    dlog_.assign(q, 0);
    acc = 1;
    for (std::uint64_t e = 0; e < q - 1; ++e) {
        dlog_[acc] = static_cast<std::uint32_t>(e);
        acc = mul_mod(acc, generator_, q);
    }
}

std::uint64_t GroupContext::dlog(std::uint64_t x) const {
    x %= q_;
    if (x == 0) throw std::invalid_argument("dlog: x must be coprime to q");
    return dlog_[x];
}

std::uint64_t GroupContext::psi(std::uint64_t x) const {
    return dlog(x) % index_.value;
}

GroupContext::CosetPair GroupContext::coset_pair(std::uint64_t c) const {
    const std::uint64_t P = index_.value;
    if (c == 0 || c >= P || c % index_.p == 0)
        throw std::invalid_argument("coset_pair: need 1 <= c < P with p not dividing c");
    const std::uint64_t gc = pow_mod(generator_, c, q_);
    const std::uint64_t gminus = pow_mod(generator_, P - c, q_);
    CosetPair out;
    for (std::uint64_t h : h_members_) {
        out.plus.push_back(mul_mod(gc, h, q_));
        out.minus.push_back(mul_mod(gminus, h, q_));
    }
    std::sort(out.plus.begin(), out.plus.end());
    std::sort(out.minus.begin(), out.minus.end());
    return out;
}

}  // namespace navoid
