#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

// Scalar special-function primitives and sequence-acceleration engines.
// Everything in this header is a pure function of its arguments; there is
// no global mutable state and all entry points are safe to call from any
// number of threads.

namespace translab::core {

// ---------------------------------------------------------------------------
// Evaluation policies and results
// ---------------------------------------------------------------------------

/// Caps for truncated series evaluation. Evaluation halts at whichever
/// bound triggers first: the term budget or the tail tolerance.
struct TruncationPolicy {
    std::size_t max_terms = 100000;
    double tail_tol = 1e-12;

    void validate() const;  // throws std::invalid_argument on bad fields
};

/// Value of a truncated/accelerated summation plus convergence evidence.
/// `tail_bound` is an upper estimate for the omitted tail; std::nullopt
/// means no usable bound is available for the inputs. When a result is
/// produced under a TruncationPolicy, `converged` means the bound was
/// established and is <= the policy's tail_tol.
struct SeriesResult {
    double value = 0.0;
    std::size_t terms_used = 0;
    std::optional<double> tail_bound;
    bool converged = false;
};

/// Sequence-acceleration scheme selector.
///   Raw        -- no transformation, last partial wins
///   Richardson -- polynomial extrapolation in 1/N; expects partials
///                 sampled at indices N, 2N, 4N, ...; `levels` <= 8
///   Aitken     -- iterated delta-squared
///   AltCvz     -- Cohen--Rodriguez Villegas--Zagier acceleration for
///                 alternating series (input: partial sums)
struct AccelMethod {
    enum class Kind { Raw, Richardson, Aitken, AltCvz };

    Kind kind = Kind::Raw;
    int levels = 1;  // Richardson only

    static AccelMethod raw() { return {Kind::Raw, 1}; }
    static AccelMethod richardson(int levels);
    static AccelMethod aitken() { return {Kind::Aitken, 1}; }
    static AccelMethod alt_cvz() { return {Kind::AltCvz, 1}; }
};

// ---------------------------------------------------------------------------
// Compensated accumulation
// ---------------------------------------------------------------------------

/// Kahan compensated summation; keeps absolute rounding near eps*|sum|
/// even for ladders running to 10^6 terms.
class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Compensated running product (Ogita-Rump-Oishi style): tracks the exact
/// fma residual of every multiply and propagates it to first order.
class CompensatedProduct {
public:
    void multiply(double f);
    double value() const { return product_ + err_; }

private:
    double product_ = 1.0;
    double err_ = 0.0;
};

// ---------------------------------------------------------------------------
// Gamma-function family
// ---------------------------------------------------------------------------

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients)
/// with upward recurrence below x = 0.5. Throws std::domain_error for
/// x <= 0.
double log_gamma(double x);

/// ln Gamma(x + delta) - ln Gamma(x), evaluated from the Lanczos
/// representation of the *ratio* so that no large-magnitude ln Gamma
/// values are ever subtracted. Absolute error stays near machine epsilon
/// for any x up to ~1e7, where naive differencing of log_gamma would lose
/// up to five digits. Requires x > 0 and x + delta > 0.
double log_gamma_diff(double x, double delta);

/// Defect of the Legendre duplication identity at n,
///   ln Gamma(2n) - [(2n-1) ln 2 + ln Gamma(n) + ln Gamma(n+1/2) - (ln pi)/2],
/// computed from a single Lanczos combination in which all intermediates
/// stay O(1). The result is the identity's genuine floating-point residual
/// (~1e-13 worst case), not differencing noise. Requires n > 0.
double log_gamma_duplication_defect(double n);

/// ln C(n, k). Exact 128-bit integer path for n <= 62, log-gamma route
/// above. Throws std::domain_error when k > n.
double log_binomial(unsigned n, unsigned k);

/// Exact binomial coefficient for n <= 62 (fits in 64 bits; intermediates
/// use 128-bit arithmetic). Throws std::domain_error for k > n or n > 62.
std::uint64_t binomial_exact(unsigned n, unsigned k);

/// Even-index Bernoulli numbers B_2, B_4, ..., B_{2*count}, computed with
/// exact rational arithmetic via the defining recurrence
/// sum_j C(n+1, j) B_j = 0 and converted to double at the end.
/// count must lie in [1, 40].
std::vector<double> bernoulli_numbers(int count);

// ---------------------------------------------------------------------------
// Sequence acceleration
// ---------------------------------------------------------------------------

/// Extrapolate the limit of a sequence of partial values (>= 3 of them).
/// See AccelMethod for per-scheme input expectations.
double accelerate(std::span<const double> partials, const AccelMethod& method);

/// Sum of the alternating series sum_k (-1)^k a_k by CVZ Chebyshev-weighted
/// acceleration; `magnitude(k)` returns a_k, which must eventually be
/// positive, smooth and decreasing (totally monotone for the error bound to
/// be rigorous). Empirical error ~ (3+sqrt(8))^-n ~ 5.83^-n. n_terms must
/// be >= 2 and is clamped to 300 (the scheme's weights overflow beyond
/// that, and the attainable error floor is hit near n = 25 anyway).
/// The returned tail_bound is |a_0| * (3+sqrt 8)^-n plus a rounding floor;
/// `converged` is true whenever that bound is finite.
SeriesResult alt_series_sum(const std::function<double(std::size_t)>& magnitude,
                            std::size_t n_terms);

/// Symmetric difference quotient (f(x+h) - f(x-h)) / (2h).
double central_diff(const std::function<double(double)>& f, double x, double h);

namespace detail {

inline constexpr double lanczos_g = 7.0;

/// The Lanczos partial-fraction sum A(z) with z = x - 1; valid for
/// x >= 0.5, i.e. zm1 >= -0.5.
double lanczos_sum(double zm1);

}  // namespace detail

}  // namespace translab::core
