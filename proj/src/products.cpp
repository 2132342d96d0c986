#include "translab/products.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "translab/core_numerics.hpp"

namespace translab::products {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kInvSqrtPi = 0.56418958354775628695;  // 1/sqrt(pi)
constexpr std::uint64_t kLinearDomainLimit = 1000000;

double wallis_factor(std::uint64_t j) {
    const double dj = static_cast<double>(j);
    return (4.0 * dj * dj) / ((2.0 * dj - 1.0) * (2.0 * dj + 1.0));
}

// Exponent sum of the n-th Sondow factor: 2^-n sum (-1)^{k+1} C(n,k) ln(k+1).
// Always a single inner sum scaled afterwards; per-k powers (k+1)^C(n,k)
// would overflow immediately.
double sondow_exponent(int n) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double c = static_cast<double>(core::binomial_exact(
            static_cast<unsigned>(n), static_cast<unsigned>(k)));
        const double term = c * std::log(static_cast<double>(k) + 1.0);
        s += (k % 2 == 0) ? -term : term;
    }
    return std::ldexp(s, -n);  // s * 2^-n
}

void check_depth(int depth) {
    if (depth < 1) throw std::domain_error("sondow: depth must be >= 1");
    if (depth > 62)
        throw std::domain_error(
            "sondow: depth > 62 unsupported (exact-binomial budget)");
}

}  // namespace

double wallis_partial(std::uint64_t n) {
    if (n < 1) throw std::domain_error("wallis_partial: n must be >= 1");
    core::CompensatedProduct prod;
    for (std::uint64_t j = 1; j <= n; ++j) prod.multiply(wallis_factor(j));
    return prod.value();
}

std::vector<LadderRow> wallis_ladder(std::uint64_t n_max) {
    if (n_max < 1) throw std::domain_error("wallis_ladder: n_max must be >= 1");
    std::vector<LadderRow> rows;
    core::CompensatedProduct prod;
    std::uint64_t next = 1;
    for (std::uint64_t j = 1; j <= n_max; ++j) {
        prod.multiply(wallis_factor(j));
        if (j == next || j == n_max) {
            const double p = prod.value();
            rows.push_back({j, p, p - kHalfPi, kHalfPi});
            while (next <= j) next *= 2;
        }
    }
    return rows;
}

double euler_sine_partial(double x, std::uint64_t n) {
    if (n < 1) throw std::domain_error("euler_sine_partial: n must be >= 1");
    if (x == 0.0) return 1.0;  // limit value of sin x / x
    const double x2 = x * x;
    core::CompensatedProduct prod;
    for (std::uint64_t k = 1; k <= n; ++k) {
        const double dk = static_cast<double>(k);
        prod.multiply(1.0 - x2 / (dk * dk * std::numbers::pi * std::numbers::pi));
    }
    return prod.value();
}

std::vector<LadderRow> sine_ladder(double x, std::uint64_t n_max) {
    if (n_max < 1) throw std::domain_error("sine_ladder: n_max must be >= 1");
    const double target = x == 0.0 ? 1.0 : std::sin(x) / x;
    const double x2 = x * x;
    std::vector<LadderRow> rows;
    core::CompensatedProduct prod;
    std::uint64_t next = 1;
    for (std::uint64_t k = 1; k <= n_max; ++k) {
        const double dk = static_cast<double>(k);
        prod.multiply(1.0 - x2 / (dk * dk * std::numbers::pi * std::numbers::pi));
        if (k == next || k == n_max) {
            const double p = prod.value();
            rows.push_back({k, p, p - target, target});
            while (next <= k) next *= 2;
        }
    }
    return rows;
}

GammaRatioValue gamma_ratio(GammaRatioVariant variant, std::uint64_t n) {
    if (n < 1) throw std::domain_error("gamma_ratio: n must be >= 1");
    const double nd = static_cast<double>(n);
    const double delta = variant == GammaRatioVariant::Half ? -0.5 : 0.5;
    GammaRatioValue out;
    // ln Gamma(n+1) - ln Gamma(n+1 +- 1/2) via the stable ratio form.
    out.lgamma_route = std::exp(-core::log_gamma_diff(nd + 1.0, delta));

    if (n <= kLinearDomainLimit) {
        core::CompensatedProduct prod;
        for (std::uint64_t j = 1; j <= n; ++j) {
            const double dj = static_cast<double>(j);
            prod.multiply(variant == GammaRatioVariant::Half
                              ? (2.0 * dj) / (2.0 * dj - 1.0)
                              : (2.0 * dj) / (2.0 * dj + 1.0));
        }
        const double lead =
            variant == GammaRatioVariant::Half ? kInvSqrtPi : 2.0 * kInvSqrtPi;
        out.product_route = lead * prod.value();
    } else {
        // Log-domain fallback for very long products.
        core::KahanSum logsum;
        for (std::uint64_t j = 1; j <= n; ++j) {
            const double dj = static_cast<double>(j);
            logsum.add(variant == GammaRatioVariant::Half
                           ? std::log((2.0 * dj) / (2.0 * dj - 1.0))
                           : std::log((2.0 * dj) / (2.0 * dj + 1.0)));
        }
        const double lead = variant == GammaRatioVariant::Half
                                ? -std::log(std::numbers::pi) / 2.0
                                : std::log(2.0) - std::log(std::numbers::pi) / 2.0;
        out.product_route = std::exp(lead + logsum.value());
    }
    return out;
}

double legendre_duplication_residual(double n) {
    if (!(n > 0.0))
        throw std::domain_error("legendre_duplication_residual: n must be > 0");
    return std::abs(core::log_gamma_duplication_defect(n));
}

double sondow_factor(int n) {
    if (n < 1 || n > 62)
        throw std::domain_error("sondow_factor: n must be in [1, 62]");
    return std::exp(sondow_exponent(n));
}

double sondow_pi_product(int depth) {
    check_depth(depth);
    core::CompensatedProduct prod;
    for (int n = 1; n <= depth; ++n) prod.multiply(sondow_factor(n));
    return prod.value();
}

std::vector<LadderRow> sondow_ladder(int depth) {
    check_depth(depth);
    std::vector<LadderRow> rows;
    core::CompensatedProduct prod;
    for (int n = 1; n <= depth; ++n) {
        prod.multiply(sondow_factor(n));
        const double p = prod.value();
        rows.push_back({static_cast<std::uint64_t>(n), p, p - kHalfPi, kHalfPi});
    }
    return rows;
}

double s_constant(int depth) {
    check_depth(depth);
    core::KahanSum sum;
    for (int n = 0; n <= depth; ++n) sum.add(sondow_exponent(n));
    return sum.value();
}

}  // namespace translab::products
