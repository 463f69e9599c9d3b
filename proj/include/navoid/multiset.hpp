#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "navoid/group.hpp"

namespace navoid {

enum class GroupLaw { Additive, Multiplicative };

// Multiset of residues with multiplicities over a stated modulus and group law.
// Under the multiplicative law every residue must be coprime to the modulus.
class ResidueMultiset {
public:
    using Entry = std::pair<std::uint64_t, std::uint64_t>;  // (residue, multiplicity)

    ResidueMultiset(std::uint64_t modulus, GroupLaw law);
    ResidueMultiset(std::uint64_t modulus, GroupLaw law,
                    std::initializer_list<std::uint64_t> elements);

    void add(std::uint64_t residue, std::uint64_t count = 1);

    std::uint64_t modulus() const { return modulus_; }
    GroupLaw law() const { return law_; }
    std::uint64_t size() const { return size_; }  // total multiplicity
    bool empty() const { return size_ == 0; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::uint64_t multiplicity(std::uint64_t residue) const;

    std::string to_string() const;

    bool operator==(const ResidueMultiset&) const = default;
    bool operator<(const ResidueMultiset& other) const;

private:
    std::uint64_t modulus_;
    GroupLaw law_;
    std::uint64_t size_ = 0;
    std::vector<Entry> entries_;  // sorted by residue
};

enum class SubsetRule { IncludeEmpty, NonemptyOnly };

// True iff no subset of m combines to `target` under the stated law (the empty
// subset, combining to the identity, participates only under IncludeEmpty).
// Reachable-set dynamic programming over Z/mZ.
bool avoids_target(const ResidueMultiset& m, std::uint64_t target, SubsetRule rule);

// Largest size of a multiset of residues mod m with no nonempty zero-sum
// subset, plus all witnesses of that size. Closed form: m - 1, witnesses
// are the (m-1)-fold repeats of each unit.
struct KappaZero {
    std::uint64_t kappa = 0;
    std::vector<ResidueMultiset> extremal;
};
KappaZero kappa_cyclic_zero(std::uint64_t m);

// Exhaustive search results for the target-avoiding variant (empty subset
// included). `exceeds_cap` is set when a witness of size `cap` exists, in
// which case kappa/extremal are not meaningful (the value may be infinite).
struct KappaSearch {
    bool exceeds_cap = false;
    std::uint64_t kappa = 0;
    std::vector<ResidueMultiset> extremal;
};
KappaSearch kappa_avoiding(std::uint64_t m, std::uint64_t target, std::uint64_t cap);

// Exhaustive counterpart of kappa_cyclic_zero (nonempty subsets, target 0),
// used as the independent check of the closed form.
KappaSearch kappa_zero_bruteforce(std::uint64_t m, std::uint64_t cap);

// The maximal a-avoiding multiset built from direction b: n copies of b and
// p^r - 2 - n copies of -b, where n is the least nonnegative solution of
// n = a b^{-1} - 1 (mod p^r). Requires p^{r-1} | a, a != 0, p not dividing b.
ResidueMultiset extremal_avoider(std::uint64_t p, std::uint32_t r, std::uint64_t a,
                                 std::uint64_t b);

struct ExtremalEntry {
    std::uint64_t eta;
    std::uint64_t c;
    ResidueMultiset multiset;
};

// Canonical list of the distinct maximal multisets avoiding a = p^{r-1}
// mod p^r: eta copies of c and p^r - 2 - eta copies of -c. Empty for p^r = 2.
struct ExtremalFamily {
    std::uint64_t p = 0;
    std::uint32_t r = 0;
    std::vector<ExtremalEntry> entries;
};
ExtremalFamily extremal_family(std::uint64_t p, std::uint32_t r);

// Sum of C(p^r - 2, eta) over the (eta, c) pairs (1 for p^r = 2, where the
// single pair carries the empty multiset).
std::uint64_t extremal_binomial_family_sum(std::uint64_t p, std::uint32_t r);

// The closed form p^{r-1} * sum_{1 <= j <= p/2} C(p^r - 2, p^{r-1} j - 1).
std::uint64_t extremal_binomial_closed_sum(std::uint64_t p, std::uint32_t r);

// Split of a multiplicative multiset mod q: `heavy` holds the distinct
// elements of multiplicity >= q - 2, `subgroup` is the subgroup they
// generate ({1} if none), `outside` the sub-multiset lying outside it.
struct MultisetDecomposition {
    std::vector<std::uint64_t> heavy;
    std::vector<std::uint64_t> subgroup;  // sorted members
    ResidueMultiset outside;
};
MultisetDecomposition decompose_heavy(const ResidueMultiset& m, std::uint64_t q);

// Structural bounds satisfied by any multiset avoiding a multiplicatively:
//   (i)   |outside| <= (q-1)(q-3)
//   (ii)  |subgroup| <= |H(a)|, with equality exactly when subgroup == H(a)
//   (iii) if subgroup == H(a), |outside| <= P - 2
//   (iv)  if subgroup == H(a), |outside| == P - 2 and P >= 3, the psi-image
//         of `outside` is a member of extremal_family(p, r)
struct DecompositionReport {
    MultisetDecomposition parts;
    std::uint64_t outside_size = 0;
    bool size_bound = false;         // (i)
    bool subgroup_bound = false;     // (ii)
    bool equals_avoiding = false;    // subgroup == H(a)
    bool outside_bound = false;      // (iii), vacuously true if subgroup != H(a)
    bool image_applicable = false;   // (iv) hypothesis holds
    bool image_in_family = false;    // (iv), vacuously true when not applicable
    bool all_hold() const {
        return size_bound && subgroup_bound && outside_bound &&
               (!image_applicable || image_in_family);
    }
};
DecompositionReport check_decomposition(const ResidueMultiset& m, const GroupContext& ctx);

}  // namespace navoid
