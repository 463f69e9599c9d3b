#include "navoid/constants.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "navoid/multiset.hpp"

namespace navoid {

namespace {

void check_cutoff(std::uint64_t y) {
    if (y < 100) throw std::invalid_argument("cutoff y must be >= 100");
    if (y > kConstantCutoffCap)
        throw ResourceError("cutoff y capped at " + std::to_string(kConstantCutoffCap));
}

// log of prod (1 - 1/p) over primes p <= y in the allowed classes, together
// with the same sum truncated at y/10.
struct LogProductPair {
    double full = 0.0;
    double tenth = 0.0;
};

template <class Keep>
LogProductPair log_mertens_product(std::uint64_t y, Keep&& keep) {
    LogProductPair out;
    const std::uint64_t y10 = y / 10;
    for_each_prime(y, [&](std::uint64_t p) {
        if (!keep(p)) return;
        const double term = std::log1p(-1.0 / static_cast<double>(p));
        out.full += term;
        if (p <= y10) out.tenth += term;
    });
    return out;
}

double finish_delta(TruncatedConstant& c) {
    c.relative_delta = std::abs(c.value - c.value_at_y_over_10) / std::abs(c.value);
    return c.relative_delta;
}

// log of p^(r-1) * sum_{1 <= j <= p/2} C(p^r - 2, p^(r-1) j - 1). Exact
// integers for small P, lgamma-based log-sum-exp beyond.
double log_binomial_block_sum(const PrimePower& pp) {
    const std::uint64_t P = pp.value;
    if (P <= 62) {
        return std::log(static_cast<double>(extremal_binomial_closed_sum(pp.p, pp.r)));
    }
    const double n = static_cast<double>(P - 2);
    const double prm1 = static_cast<double>(P / pp.p);
    double max_term = -1e300;
    std::vector<double> terms;
    for (std::uint64_t j = 1; j <= pp.p / 2; ++j) {
        const double k = prm1 * static_cast<double>(j) - 1.0;
        const double t = log_binomial(n, k);
        terms.push_back(t);
        max_term = std::max(max_term, t);
    }
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - max_term);
    return std::log(prm1) + max_term + std::log(sum);
}

}  // namespace

double mertens_ap_product(std::uint64_t y, std::uint64_t q,
                          const std::vector<std::uint64_t>& classes) {
    if (q < 1) throw std::invalid_argument("modulus must be >= 1");
    std::vector<std::uint8_t> allowed(q, 0);
    for (std::uint64_t c : classes) {
        if (c >= q) throw std::invalid_argument("classes must lie in [0, q)");
        allowed[c] = 1;
    }
    double log_prod = 0.0;
    for_each_prime(y, [&](std::uint64_t p) {
        if (allowed[p % q]) log_prod += std::log1p(-1.0 / static_cast<double>(p));
    });
    return std::exp(log_prod);
}

TruncatedConstant v_constant(std::uint64_t q, std::uint64_t a, std::uint64_t y) {
    check_cutoff(y);
    const GroupContext ctx(q, a);
    const double inv_p = 1.0 / static_cast<double>(ctx.index().value);
    const auto logs = log_mertens_product(
        y, [&](std::uint64_t p) { return ctx.in_subgroup(p % q); });
    TruncatedConstant out{"V", y};
    out.value = std::pow(std::log(static_cast<double>(y)), -inv_p) * std::exp(-logs.full);
    out.value_at_y_over_10 =
        std::pow(std::log(static_cast<double>(y / 10)), -inv_p) * std::exp(-logs.tenth);
    finish_delta(out);
    return out;
}

double w_constant(std::uint64_t q, std::uint64_t a) {
    const PrimePower pp = subgroup_index(q, a);
    const double P = static_cast<double>(pp.value);
    const double log_w = -kEulerGamma / P +
                         (-1.0 + 1.0 / P) * std::log1p(-1.0 / static_cast<double>(q)) -
                         std::lgamma(1.0 / P) - (P - 2.0) * std::log(P) -
                         std::lgamma(P - 1.0) + log_binomial_block_sum(pp);
    return std::exp(log_w);
}

TruncatedConstant theta_constant(std::uint64_t q, std::uint64_t a, std::uint64_t y) {
    const PrimePower pp = subgroup_index(q, a);
    const double inv_p = 1.0 / static_cast<double>(pp.value);
    const double prefactor = std::exp(-kEulerGamma * inv_p) *
                             std::pow(1.0 - 1.0 / static_cast<double>(q), inv_p) /
                             gamma_fn(inv_p);
    TruncatedConstant v = v_constant(q, a, y);
    TruncatedConstant out{"theta", y};
    out.value = prefactor * v.value;
    out.value_at_y_over_10 = prefactor * v.value_at_y_over_10;
    finish_delta(out);
    return out;
}

TruncatedConstant varpi_constant(std::uint64_t m, std::uint64_t a, std::uint64_t y) {
    if (m < 1) throw std::invalid_argument("modulus must be >= 1");
    if (std::gcd(a % m, m) != 1)
        throw std::invalid_argument("varpi requires gcd(a, m) = 1");
    check_cutoff(y);
    const double exponent = 1.0 / static_cast<double>(euler_phi(m));
    const auto logs =
        log_mertens_product(y, [&](std::uint64_t p) { return p % m == a % m; });
    TruncatedConstant out{"varpi", y};
    out.value = std::pow(std::log(static_cast<double>(y)), exponent) * std::exp(logs.full);
    out.value_at_y_over_10 =
        std::pow(std::log(static_cast<double>(y / 10)), exponent) * std::exp(logs.tenth);
    finish_delta(out);
    return out;
}

Prediction predict_unit(double x, std::uint64_t q) {
    if (q < 3 || q % 2 == 0 || !is_prime(q))
        throw std::invalid_argument("unit-class prediction requires an odd prime q");
    if (x < 3.0) throw std::invalid_argument("prediction requires x >= 3");
    const double qd = static_cast<double>(q);
    const double log_c1 = std::log(static_cast<double>(euler_phi(q - 1))) + std::log(qd) -
                          (qd - 1.0) * std::log(qd - 1.0) - std::lgamma(qd - 2.0);
    const double c1 = std::exp(log_c1);
    Prediction out;
    out.x = x;
    out.q = q;
    out.a = 1;
    out.P = PrimePower{};
    out.V = TruncatedConstant{"C1", 0, c1, c1, 0.0};
    out.W = 1.0;
    out.kind = MainTermKind::UnitClass;
    out.main_term = c1 * x * std::pow(log_iter(x, 2), qd - 3.0) / log_iter(x, 1);
    return out;
}

Prediction predict_general(double x, std::uint64_t q, std::uint64_t a, std::uint64_t y) {
    if (x < 3.0) throw std::invalid_argument("prediction requires x >= 3");
    Prediction out;
    out.x = x;
    out.q = q;
    out.a = a;
    out.P = subgroup_index(q, a);
    out.V = v_constant(q, a, y);
    out.W = w_constant(q, a);
    out.kind = MainTermKind::General;
    const double P = static_cast<double>(out.P.value);
    out.main_term = out.V.value * out.W * x * std::pow(log_iter(x, 2), P - 2.0) /
                    std::pow(log_iter(x, 1), 1.0 - 1.0 / P);
    return out;
}

Prediction predict(double x, std::uint64_t q, std::uint64_t a, std::uint64_t y) {
    if (a == 1) return predict_unit(x, q);
    return predict_general(x, q, a, y);
}

double main_term_via_theta(double x, std::uint64_t q, std::uint64_t a, std::uint64_t y) {
    if (x < 3.0) throw std::invalid_argument("prediction requires x >= 3");
    const PrimePower pp = subgroup_index(q, a);
    const double P = static_cast<double>(pp.value);
    const TruncatedConstant theta = theta_constant(q, a, y);
    const double log_rest = log_binomial_block_sum(pp) - (P - 2.0) * std::log(P) -
                            std::lgamma(P - 1.0) -
                            std::log1p(-1.0 / static_cast<double>(q));
    return theta.value * std::exp(log_rest) * x * std::pow(log_iter(x, 2), P - 2.0) /
           std::pow(log_iter(x, 1), 1.0 - 1.0 / P);
}

double main_term_from_parts(double x, std::uint64_t q, std::uint64_t P, double V, double W) {
    if (P == 0) {
        const double qd = static_cast<double>(q);
        return V * W * x * std::pow(log_iter(x, 2), qd - 3.0) / log_iter(x, 1);
    }
    const double Pd = static_cast<double>(P);
    return V * W * x * std::pow(log_iter(x, 2), Pd - 2.0) /
           std::pow(log_iter(x, 1), 1.0 - 1.0 / Pd);
}

}  // namespace navoid
