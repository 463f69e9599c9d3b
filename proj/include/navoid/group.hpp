#pragma once

#include <cstdint>
#include <vector>

#include "navoid/arith.hpp"

namespace navoid {

struct PrimePower {
    std::uint64_t p = 0;
    std::uint32_t r = 0;
    std::uint64_t value = 0;  // p^r
    bool operator==(const PrimePower&) const = default;
};

// The prime power p^r = min over primes p_j | ord_q(a) of p_j^{alpha_j - beta_j + 1},
// where q - 1 = prod p_j^{alpha_j} and ord_q(a) = prod p_j^{beta_j}. This is the
// index of the largest subgroup of (Z/qZ)* not containing a.
PrimePower subgroup_index(std::uint64_t q, std::uint64_t a);

// Membership table (size q) of the largest subgroup of (Z/qZ)* avoiding a:
// the unique subgroup of order (q-1)/subgroup_index, i.e. the set of x with
// x^((q-1)/P) = 1 (mod q).
std::vector<std::uint8_t> avoiding_subgroup(std::uint64_t q, std::uint64_t a);

// Bundle of everything the counting formulas need about a progression (q, a):
// the subgroup index P = p^r, the subgroup H, a generator g of (Z/qZ)* chosen
// so that dlog_g(a) = p^(r-1) (mod p^r), and the discrete-log table base g.
class GroupContext {
public:
    static constexpr std::uint64_t kMaxModulus = 100'000;

    GroupContext(std::uint64_t q, std::uint64_t a);

    std::uint64_t q() const { return q_; }
    std::uint64_t a() const { return a_; }
    std::uint64_t order() const { return order_; }
    PrimePower index() const { return index_; }
    std::uint64_t generator() const { return generator_; }

    bool in_subgroup(std::uint64_t x) const { return in_h_[x % q_] != 0; }
    const std::vector<std::uint64_t>& subgroup() const { return h_members_; }

    // Discrete logarithm base the aligned generator; x must be coprime to q.
    std::uint64_t dlog(std::uint64_t x) const;

    // Reduction onto Z/p^rZ: dlog(x) mod p^r. Homomorphism with kernel H;
    // psi(a) = p^(r-1).
    std::uint64_t psi(std::uint64_t x) const;

    struct CosetPair {
        std::vector<std::uint64_t> plus;   // g^c H
        std::vector<std::uint64_t> minus;  // g^(P-c) H
    };
    // Requires 1 <= c < P with p not dividing c.
    CosetPair coset_pair(std::uint64_t c) const;

private:
    std::uint64_t q_, a_, order_, generator_;
    PrimePower index_;
    std::vector<std::uint8_t> in_h_;
    std::vector<std::uint64_t> h_members_;
    std::vector<std::uint32_t> dlog_;
};

}  // namespace navoid
