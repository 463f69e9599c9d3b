#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "navoid/group.hpp"

namespace navoid {

// A limit-defined constant evaluated at cutoff y, with the companion value at
// y/10 and the relative delta between the two as a stability report.
struct TruncatedConstant {
    std::string name;
    std::uint64_t y = 0;
    double value = 0.0;
    double value_at_y_over_10 = 0.0;
    double relative_delta = 0.0;
};

enum class MainTermKind { UnitClass = 1, General = 2 };

struct Prediction {
    double x = 0.0;
    std::uint64_t q = 0;
    std::uint64_t a = 0;
    PrimePower P;  // value 0 for the unit-class formula
    TruncatedConstant V;
    double W = 1.0;
    double main_term = 0.0;
    MainTermKind kind = MainTermKind::General;
};

inline constexpr std::uint64_t kConstantCutoffCap = 1'000'000'000;
inline constexpr std::uint64_t kDefaultCutoff = 10'000'000;

// Product of (1 - 1/p) over primes p <= y with p mod q in `classes`.
// Empty product is 1.
double mertens_ap_product(std::uint64_t y, std::uint64_t q,
                          const std::vector<std::uint64_t>& classes);

// V = (log y)^(-1/P) * prod over primes in H(a)-classes of (1 - 1/p)^(-1).
TruncatedConstant v_constant(std::uint64_t q, std::uint64_t a, std::uint64_t y);

// W = e^(-gamma/P) (1 - 1/q)^(-1 + 1/P) / (Gamma(1/P) P^(P-2) (P-2)!)
//     * p^(r-1) * sum_{1 <= j <= p/2} C(p^r - 2, p^(r-1) j - 1).
double w_constant(std::uint64_t q, std::uint64_t a);

// theta(q, H(a)) = e^(-gamma/P) (1 - 1/q)^(1/P) / Gamma(1/P) * V.
TruncatedConstant theta_constant(std::uint64_t q, std::uint64_t a, std::uint64_t y);

// Progression-Mertens constant estimate:
// (log y)^(1/phi(m)) * prod_{p <= y, p = a (mod m)} (1 - 1/p).
TruncatedConstant varpi_constant(std::uint64_t m, std::uint64_t a, std::uint64_t y);

// Main term for the a = 1 count:
// phi(q-1) q / ((q-1)^(q-1) (q-3)!) * x (loglog x)^(q-3) / log x,
// with the clamped iterated logarithm throughout.
Prediction predict_unit(double x, std::uint64_t q);

// Main term for 1 < a < q: V W x (loglog x)^(P-2) / (log x)^(1 - 1/P).
Prediction predict_general(double x, std::uint64_t q, std::uint64_t a, std::uint64_t y);

// Dispatch on a (a = 1 ignores y).
Prediction predict(double x, std::uint64_t q, std::uint64_t a, std::uint64_t y);

// The same general main term assembled through theta(q, H(a)) instead of V*W:
// theta * (1 - 1/q)^(-1) * S / (P^(P-2) (P-2)!) * x (loglog x)^(P-2) / (log x)^(1-1/P),
// where S is the closed binomial sum. Cross-check path for the V*W route.
double main_term_via_theta(double x, std::uint64_t q, std::uint64_t a, std::uint64_t y);

// Recompute a main term from stored row components (see ExperimentRow):
// P == 0 selects the unit-class formula, which reads the exponent from q.
double main_term_from_parts(double x, std::uint64_t q, std::uint64_t P, double V, double W);

}  // namespace navoid
