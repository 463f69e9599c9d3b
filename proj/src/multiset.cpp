#include "navoid/multiset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace navoid {

namespace {

std::uint64_t pow_u64(std::uint64_t p, std::uint32_t r) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < r; ++i) v *= p;
    return v;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a % m);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t k = r0 / r1;
        std::int64_t t = r0 - k * r1;
        r0 = r1;
        r1 = t;
        t = s0 - k * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw std::invalid_argument("inverse_mod: not invertible");
    return static_cast<std::uint64_t>((s0 % static_cast<std::int64_t>(m) +
                                       static_cast<std::int64_t>(m)) %
                                      static_cast<std::int64_t>(m));
}

}  // namespace

ResidueMultiset::ResidueMultiset(std::uint64_t modulus, GroupLaw law)
    : modulus_(modulus), law_(law) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
}

ResidueMultiset::ResidueMultiset(std::uint64_t modulus, GroupLaw law,
                                 std::initializer_list<std::uint64_t> elements)
    : ResidueMultiset(modulus, law) {
    for (std::uint64_t e : elements) add(e);
}

void ResidueMultiset::add(std::uint64_t residue, std::uint64_t count) {
    if (count == 0) return;
    residue %= modulus_;
    if (law_ == GroupLaw::Multiplicative && std::gcd(residue, modulus_) != 1)
        throw std::invalid_argument("multiplicative multiset requires residues coprime to the modulus");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), residue,
                               [](const Entry& e, std::uint64_t v) { return e.first < v; });
    if (it != entries_.end() && it->first == residue)
        it->second += count;
    else
        entries_.insert(it, {residue, count});
    size_ += count;
}

std::uint64_t ResidueMultiset::multiplicity(std::uint64_t residue) const {
    residue %= modulus_;
    for (const auto& [r, c] : entries_)
        if (r == residue) return c;
    return 0;
}

std::string ResidueMultiset::to_string() const {
    std::string s = "<";
    bool first = true;
    for (const auto& [r, c] : entries_) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(r);
        if (c > 1) s += "x" + std::to_string(c);
    }
    s += "> mod " + std::to_string(modulus_);
    return s;
}

bool ResidueMultiset::operator<(const ResidueMultiset& other) const {
    return entries_ < other.entries_;
}

bool avoids_target(const ResidueMultiset& m, std::uint64_t target, SubsetRule rule) {
    const std::uint64_t mod = m.modulus();
    if (target >= mod) throw std::invalid_argument("target must be reduced mod modulus");
    if (m.law() == GroupLaw::Multiplicative && std::gcd(target, mod) != 1)
        throw std::invalid_argument("multiplicative target must be coprime to the modulus");
    const std::uint64_t identity = (m.law() == GroupLaw::Additive) ? 0 : 1 % mod;
    if (rule == SubsetRule::IncludeEmpty && target == identity) return false;

    // reach[v] = 1 iff some nonempty subset combines to v
    std::vector<char> reach(mod, 0), next(mod, 0);
    for (const auto& [res, count] : m.entries()) {
        for (std::uint64_t i = 0; i < count; ++i) {
            next = reach;
            for (std::uint64_t v = 0; v < mod; ++v) {
                if (!reach[v]) continue;
                const std::uint64_t w = (m.law() == GroupLaw::Additive)
                                            ? (v + res) % mod
                                            : (v * res) % mod;
                next[w] = 1;
            }
            next[res] = 1;
            reach.swap(next);
            if (reach[target]) return false;
        }
    }
    return true;
}

KappaZero kappa_cyclic_zero(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    KappaZero out;
    if (m == 1) return out;  // kappa 0, no extremal multisets
    out.kappa = m - 1;
    for (std::uint64_t u = 1; u < m; ++u) {
        if (std::gcd(u, m) != 1) continue;
        ResidueMultiset w(m, GroupLaw::Additive);
        w.add(u, m - 1);
        out.extremal.push_back(std::move(w));
    }
    return out;
}

namespace {

// DFS over nondecreasing sequences of nonzero residues. Extending a multiset
// can only grow its reachable set, so a prefix that already combines to the
// target prunes every extension.
// The empty-subset rule never matters here: the zero-sum variant ignores the
// empty subset and the avoiding variant has target != 0.
struct KappaDfs {
    std::uint64_t m;
    std::uint64_t target;
    std::uint64_t cap;

    bool exceeded = false;
    std::uint64_t best = 0;
    std::vector<std::vector<std::uint64_t>> witnesses;

    void run() {
        std::vector<std::uint64_t> elems;
        std::vector<char> reach(m, 0);
        witnesses.push_back({});  // the empty multiset always qualifies
        descend(elems, reach, 1);
    }

    void descend(std::vector<std::uint64_t>& elems, std::vector<char>& reach,
                 std::uint64_t min_elem) {
        if (exceeded) return;
        if (elems.size() == cap) {
            exceeded = true;
            return;
        }
        for (std::uint64_t e = min_elem; e < m; ++e) {
            std::vector<char> next = reach;
            for (std::uint64_t v = 0; v < m; ++v)
                if (reach[v]) next[(v + e) % m] = 1;
            next[e % m] = 1;
            if (next[target]) continue;  // pruned: every extension also fails
            elems.push_back(e);
            if (elems.size() > best) {
                best = elems.size();
                witnesses.clear();
            }
            if (elems.size() == best) witnesses.push_back(elems);
            descend(elems, next, e);
            elems.pop_back();
            if (exceeded) return;
        }
    }
};

KappaSearch run_kappa_dfs(std::uint64_t m, std::uint64_t target, std::uint64_t cap) {
    KappaDfs dfs{m, target, cap};
    dfs.run();
    KappaSearch out;
    out.exceeds_cap = dfs.exceeded;
    if (!dfs.exceeded) {
        out.kappa = dfs.best;
        for (const auto& elems : dfs.witnesses) {
            if (elems.size() != dfs.best) continue;
            ResidueMultiset w(m, GroupLaw::Additive);
            for (std::uint64_t e : elems) w.add(e);
            out.extremal.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace

KappaSearch kappa_avoiding(std::uint64_t m, std::uint64_t target, std::uint64_t cap) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    target %= m;
    if (target == 0) throw std::invalid_argument("target must be nonzero");
    return run_kappa_dfs(m, target, cap);
}

KappaSearch kappa_zero_bruteforce(std::uint64_t m, std::uint64_t cap) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    return run_kappa_dfs(m, 0, cap);
}

ResidueMultiset extremal_avoider(std::uint64_t p, std::uint32_t r, std::uint64_t a,
                                 std::uint64_t b) {
    if (!is_prime(p) || r < 1) throw std::invalid_argument("p^r must be a prime power");
    const std::uint64_t pr = pow_u64(p, r);
    const std::uint64_t prm1 = pr / p;
    a %= pr;
    b %= pr;
    if (a == 0 || a % prm1 != 0)
        throw std::invalid_argument("a must be a nonzero multiple of p^(r-1)");
    if (b % p == 0) throw std::invalid_argument("b must not be divisible by p");
    // least nonnegative n with n = a b^{-1} - 1 (mod p^r); a != 0 keeps n < p^r - 1
    const std::uint64_t n = (mul_mod(a, inverse_mod(b, pr), pr) + pr - 1) % pr;
    ResidueMultiset out(pr, GroupLaw::Additive);
    if (n > 0) out.add(b, n);
    if (pr - 2 - n > 0) out.add((pr - b) % pr, pr - 2 - n);
    return out;
}

MultisetDecomposition decompose_heavy(const ResidueMultiset& m, std::uint64_t q) {
    if (m.law() != GroupLaw::Multiplicative || m.modulus() != q)
        throw std::invalid_argument("expected a multiplicative multiset mod q");
    if (q < 3 || !is_prime(q)) throw std::invalid_argument("q must be an odd prime");
    MultisetDecomposition out{{}, {}, ResidueMultiset(q, GroupLaw::Multiplicative)};
    const std::uint64_t threshold = q - 2;
    for (const auto& [res, count] : m.entries())
        if (count >= threshold) out.heavy.push_back(res);

    std::vector<std::uint8_t> in_h(q, 0);
    in_h[1] = 1;
    // close under multiplication by the heavy generators
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::uint64_t x = 1; x < q; ++x) {
            if (!in_h[x]) continue;
            for (std::uint64_t g : out.heavy) {
                const std::uint64_t y = mul_mod(x, g, q);
                if (!in_h[y]) {
                    in_h[y] = 1;
                    grew = true;
                }
            }
        }
    }
    for (std::uint64_t x = 1; x < q; ++x)
        if (in_h[x]) out.subgroup.push_back(x);
    for (const auto& [res, count] : m.entries())
        if (!in_h[res]) out.outside.add(res, count);
    return out;
}

DecompositionReport check_decomposition(const ResidueMultiset& m, const GroupContext& ctx) {
    const std::uint64_t q = ctx.q();
    if (!avoids_target(m, ctx.a(), SubsetRule::IncludeEmpty))
        throw std::invalid_argument("multiset does not avoid a; decomposition bounds do not apply");
    DecompositionReport rep{decompose_heavy(m, q)};
    const std::uint64_t P = ctx.index().value;
    rep.outside_size = rep.parts.outside.size();
    rep.size_bound = rep.outside_size <= (q - 1) * (q - 3);
    const std::uint64_t h_size = ctx.subgroup().size();
    rep.equals_avoiding = rep.parts.subgroup == ctx.subgroup();
    rep.subgroup_bound = rep.parts.subgroup.size() < h_size ||
                         (rep.parts.subgroup.size() == h_size && rep.equals_avoiding);
    rep.outside_bound = !rep.equals_avoiding || rep.outside_size <= P - 2;
    rep.image_applicable = rep.equals_avoiding && P >= 3 && rep.outside_size == P - 2;
    rep.image_in_family = true;
    if (rep.image_applicable) {
        ResidueMultiset image(P, GroupLaw::Additive);
        for (const auto& [res, count] : rep.parts.outside.entries())
            image.add(ctx.psi(res), count);
        const ExtremalFamily fam = extremal_family(ctx.index().p, ctx.index().r);
        rep.image_in_family = false;
        for (const auto& entry : fam.entries)
            if (entry.multiset == image) rep.image_in_family = true;
    }
    return rep;
}

ExtremalFamily extremal_family(std::uint64_t p, std::uint32_t r) {
    if (!is_prime(p) || r < 1) throw std::invalid_argument("p^r must be a prime power");
    const std::uint64_t pr = pow_u64(p, r);
    const std::uint64_t prm1 = pr / p;
    ExtremalFamily fam{p, r, {}};
    if (pr == 2) return fam;  // the lone maximal multiset is empty
    auto push = [&](std::uint64_t eta, std::uint64_t c) {
        ResidueMultiset ms(pr, GroupLaw::Additive);
        if (eta > 0) ms.add(c % pr, eta);
        if (pr - 2 - eta > 0) ms.add((pr - c % pr) % pr, pr - 2 - eta);
        fam.entries.push_back({eta, c, std::move(ms)});
    };
    if (p % 2 == 1) {
        for (std::uint64_t lambda = 1; lambda <= (p - 1) / 2; ++lambda) {
            const std::uint64_t eta = prm1 * lambda - 1;
            const std::uint64_t lbar = inverse_mod(lambda, p);
            for (std::uint64_t mu = 0; mu < prm1; ++mu) push(eta, lbar + p * mu);
        }
    } else {
        // p = 2, r >= 2: eta = 2^(r-1) - 1, c odd below 2^(r-1)
        const std::uint64_t eta = pr / 2 - 1;
        for (std::uint64_t mu = 0; mu < pr / 4; ++mu) push(eta, 1 + 2 * mu);
    }
    return fam;
}

std::uint64_t extremal_binomial_family_sum(std::uint64_t p, std::uint32_t r) {
    const std::uint64_t pr = pow_u64(p, r);
    if (pr == 2) return 1;  // single (eta, c) = (0, 1) pair, empty multiset
    std::uint64_t sum = 0;
    for (const auto& entry : extremal_family(p, r).entries)
        sum += binomial(pr - 2, entry.eta);
    return sum;
}

std::uint64_t extremal_binomial_closed_sum(std::uint64_t p, std::uint32_t r) {
    const std::uint64_t pr = pow_u64(p, r);
    const std::uint64_t prm1 = pr / p;
    std::uint64_t sum = 0;
    for (std::uint64_t j = 1; j <= p / 2; ++j) sum += binomial(pr - 2, prm1 * j - 1);
    return prm1 * sum;
}

}  // namespace navoid
