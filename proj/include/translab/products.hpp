#pragma once

#include <cstdint>
#include <vector>

// Partial products and product-form identities: the Wallis product, the
// Euler sine product, the half-integer Gamma-ratio products, the Legendre
// duplication check, and the exponential product for pi/2.

namespace translab::products {

/// One row of a convergence ladder.
struct LadderRow {
    std::uint64_t index = 0;
    double partial = 0.0;
    double deviation = 0.0;  // partial - target, exactly as computed
    double target = 0.0;
};

enum class GammaRatioVariant {
    Half,       // Gamma(n+1) / Gamma(n+1/2)
    ThreeHalf,  // Gamma(n+1) / Gamma(n+3/2)
};

/// The same ratio computed two independent ways; the routes must agree to
/// relative 1e-12 (that agreement is itself one of the verified
/// identities).
struct GammaRatioValue {
    double lgamma_route = 0.0;
    double product_route = 0.0;
};

/// prod_{j=1..n} (2j)^2 / ((2j-1)(2j+1)), compensated accumulation in the
/// linear domain. Monotonically increasing, < pi/2. n >= 1.
double wallis_partial(std::uint64_t n);

/// Ladder of Wallis partials at doubling indices 1, 2, 4, ... plus n_max,
/// computed in one incremental pass; each row's partial is bit-identical
/// to wallis_partial(row.index). Target column is pi/2.
std::vector<LadderRow> wallis_ladder(std::uint64_t n_max);

/// prod_{k=1..n} (1 - x^2/(k^2 pi^2)), the partial Euler sine product.
/// x = 0 returns 1 (the removable-singularity limit of sin x / x) rather
/// than erroring. n >= 1.
double euler_sine_partial(double x, std::uint64_t n);

/// Ladder of sine-product partials at doubling indices; target is
/// sin(x)/x (1 at x = 0).
std::vector<LadderRow> sine_ladder(double x, std::uint64_t n_max);

/// Gamma(n+1)/Gamma(n+1/2) or Gamma(n+1)/Gamma(n+3/2) via (a) the Lanczos
/// log-Gamma difference and (b) the explicit product forms
///   (1/sqrt pi) prod 2j/(2j-1)   and   (2/sqrt pi) prod 2j/(2j+1).
/// Above n = 10^6 the product route switches to log-domain accumulation
/// automatically. n >= 1.
GammaRatioValue gamma_ratio(GammaRatioVariant variant, std::uint64_t n);

/// | ln Gamma(2n) - [(2n-1) ln 2 + ln Gamma(n) + ln Gamma(n+1/2)
///   - (ln pi)/2] |, evaluated in the log domain without large-argument
/// cancellation. n > 0 (real-valued).
double legendre_duplication_residual(double n);

/// n-th factor of the exponential product for pi/2:
///   f_n = exp(2^-n sum_{k=0..n} (-1)^{k+1} C(n,k) ln(k+1)),
/// so f_1 = sqrt 2, f_2 = (4/3)^{1/4}, ... Exponent sums use exact
/// binomials; 1 <= n <= 62.
double sondow_factor(int n);

/// prod_{n=1..depth} f_n -> pi/2. depth in [1, 62].
double sondow_pi_product(int depth);

/// Ladder of sondow_pi_product prefixes for n = 1..depth; target pi/2.
std::vector<LadderRow> sondow_ladder(int depth);

/// s(depth) = sum_{n=0..depth} 2^-n sum_{k=0..n} (-1)^{k+1} C(n,k) ln(k+1);
/// exp(s) -> pi/2. Same sum as ln(sondow_pi_product(depth)) term by term.
double s_constant(int depth);

}  // namespace translab::products
