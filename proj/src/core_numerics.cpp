#include "translab/core_numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace translab::core {

namespace {

// Lanczos g = 7, 9-coefficient set; relative error of the reconstructed
// Gamma stays below ~2e-15 on the positive real axis.
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kLnSqrt2Pi = 0.91893853320467274178;

}  // namespace

void TruncationPolicy::validate() const {
    if (max_terms < 1)
        throw std::invalid_argument("TruncationPolicy: max_terms must be >= 1");
    if (!(tail_tol > 0.0))
        throw std::invalid_argument("TruncationPolicy: tail_tol must be > 0");
}

AccelMethod AccelMethod::richardson(int levels) {
    if (levels < 1 || levels > 8)
        throw std::invalid_argument(
            "AccelMethod: Richardson levels must be in [1, 8]");
    return {Kind::Richardson, levels};
}

void CompensatedProduct::multiply(double f) {
    const double h = product_ * f;
    const double r = std::fma(product_, f, -h);  // exact multiply residual
    err_ = err_ * f + r;
    product_ = h;
}

namespace detail {

double lanczos_sum(double zm1) {
    double a = kLanczosCoef[0];
    for (int i = 1; i < 9; ++i) a += kLanczosCoef[i] / (zm1 + i);
    return a;
}

}  // namespace detail

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive");
    if (x == 1.0 || x == 2.0) return 0.0;
    if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
    const double z = x - 1.0;
    const double t = z + detail::lanczos_g + 0.5;
    return kLnSqrt2Pi + (z + 0.5) * std::log(t) - t +
           std::log(detail::lanczos_sum(z));
}

double log_gamma_diff(double x, double delta) {
    if (!(x > 0.0) || !(x + delta > 0.0))
        throw std::domain_error("log_gamma_diff: both arguments must be positive");
    // Shift into the Lanczos region; each step is an exact recurrence.
    double shift = 0.0;
    while (x < 0.5 || x + delta < 0.5) {
        shift += std::log(x / (x + delta));
        x += 1.0;
    }
    const double t = x - 0.5 + detail::lanczos_g;  // t at x
    const double a1 = detail::lanczos_sum(x - 1.0);
    const double a2 = detail::lanczos_sum(x - 1.0 + delta);
    return (x - 0.5) * std::log1p(delta / t) +
           delta * (std::log(t + delta) - 1.0) + std::log1p((a2 - a1) / a1) +
           shift;
}

double log_gamma_duplication_defect(double n) {
    if (!(n > 0.0))
        throw std::domain_error(
            "log_gamma_duplication_defect: argument must be positive");
    // The defect is invariant under n -> n + 1/2 (apply the Gamma
    // recurrence to both small arguments), so one shift reaches the
    // Lanczos region.
    const double m = (n < 0.5) ? n + 0.5 : n;
    const double tm = m - 0.5 + detail::lanczos_g;      // t at m
    const double tmh = m + detail::lanczos_g;           // t at m + 1/2
    // ln t_{2m} - ln t_m = ln 2 + L1, and similarly for m + 1/2; writing
    // the power terms this way keeps every intermediate O(1) so the
    // combination never subtracts large numbers.
    const double l1 = std::log1p((0.5 - detail::lanczos_g) / (2.0 * tm));
    const double l2 = std::log1p(-(detail::lanczos_g + 0.5) / (2.0 * tmh));
    const double a_2m = detail::lanczos_sum(2.0 * m - 1.0);
    const double a_m = detail::lanczos_sum(m - 1.0);
    const double a_mh = detail::lanczos_sum(m - 0.5);
    // The ln 2, ln pi and ln sqrt(2 pi) constants of the three Stirling
    // prefactors cancel exactly against the identity's own constants.
    return (m - 0.5) * l1 + m * l2 + detail::lanczos_g +
           (std::log(a_2m) - std::log(a_m) - std::log(a_mh));
}

std::uint64_t binomial_exact(unsigned n, unsigned k) {
    if (k > n) throw std::domain_error("binomial_exact: k out of range");
    if (n > 62) throw std::domain_error("binomial_exact: n must be <= 62");
    if (k > n - k) k = n - k;
    unsigned __int128 c = 1;
    for (unsigned i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;  // divides exactly at every step
    }
    return static_cast<std::uint64_t>(c);
}

double log_binomial(unsigned n, unsigned k) {
    if (k > n) throw std::domain_error("log_binomial: k out of range");
    if (n <= 62) return std::log(static_cast<double>(binomial_exact(n, k)));
    return log_gamma(static_cast<double>(n) + 1.0) -
           log_gamma(static_cast<double>(k) + 1.0) -
           log_gamma(static_cast<double>(n - k) + 1.0);
}

std::vector<double> bernoulli_numbers(int count) {
    if (count < 1) throw std::invalid_argument("bernoulli_numbers: count must be >= 1");
    if (count > 40)
        throw std::invalid_argument(
            "bernoulli_numbers: count > 40 unsupported (values overflow "
            "double usefulness)");
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;

    const int n_max = 2 * count;
    // B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j, exact rationals.
    std::vector<cpp_rational> b(static_cast<std::size_t>(n_max) + 1);
    b[0] = 1;
    std::vector<cpp_int> binom{1};  // row n+1 of Pascal's triangle, built up
    for (int n = 1; n <= n_max; ++n) {
        // extend Pascal row to C(n+1, .)
        binom.push_back(1);
        for (int j = n; j > 0; --j) binom[static_cast<std::size_t>(j)] += binom[static_cast<std::size_t>(j) - 1];
        cpp_rational acc = 0;
        for (int j = 0; j < n; ++j)
            acc += cpp_rational(binom[static_cast<std::size_t>(j)]) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(n)] = -acc / (n + 1);
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 1; k <= count; ++k)
        out.push_back(static_cast<double>(b[static_cast<std::size_t>(2 * k)]));
    return out;
}

namespace {

double richardson_extrapolate(std::span<const double> partials, int levels) {
    std::vector<double> cur(partials.begin(), partials.end());
    const int max_j = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(levels), cur.size() - 1));
    for (int j = 1; j <= max_j; ++j) {
        const double w = std::exp2(j) - 1.0;
        std::vector<double> next;
        next.reserve(cur.size() - 1);
        for (std::size_t i = 1; i < cur.size(); ++i)
            next.push_back(cur[i] + (cur[i] - cur[i - 1]) / w);
        cur = std::move(next);
    }
    return cur.back();
}

double aitken_extrapolate(std::span<const double> partials) {
    std::vector<double> cur(partials.begin(), partials.end());
    while (cur.size() >= 3) {
        std::vector<double> next;
        next.reserve(cur.size() - 2);
        for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
            const double d1 = cur[i + 1] - cur[i];
            const double d2 = cur[i + 2] - cur[i + 1];
            const double den = d2 - d1;
            double y = cur[i + 2];
            if (den != 0.0) {
                const double cand = cur[i + 2] - d2 * d2 / den;
                if (std::isfinite(cand)) y = cand;
            }
            next.push_back(y);
        }
        cur = std::move(next);
    }
    return cur.back();
}

constexpr std::size_t kCvzMaxTerms = 300;

double cvz_sum(const std::function<double(std::size_t)>& magnitude,
               std::size_t n) {
    // Cohen-Rodriguez Villegas-Zagier, Algorithm 1.
    double d = std::pow(3.0 + std::sqrt(8.0), static_cast<double>(n));
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const double nd = static_cast<double>(n);
        c = b - c;
        s += c * magnitude(k);
        b *= (kd + nd) * (kd - nd) / ((kd + 0.5) * (kd + 1.0));
    }
    return s / d;
}

}  // namespace

double accelerate(std::span<const double> partials, const AccelMethod& method) {
    if (partials.size() < 3)
        throw std::invalid_argument("accelerate: need at least 3 partial values");
    switch (method.kind) {
        case AccelMethod::Kind::Raw:
            return partials.back();
        case AccelMethod::Kind::Richardson:
            if (method.levels < 1 || method.levels > 8)
                throw std::invalid_argument(
                    "accelerate: Richardson levels must be in [1, 8]");
            return richardson_extrapolate(partials, method.levels);
        case AccelMethod::Kind::Aitken:
            return aitken_extrapolate(partials);
        case AccelMethod::Kind::AltCvz: {
            // Recover alternating-term magnitudes from the partial sums.
            std::vector<double> mags;
            mags.reserve(partials.size());
            mags.push_back(std::abs(partials[0]));
            for (std::size_t i = 1; i < partials.size(); ++i)
                mags.push_back(std::abs(partials[i] - partials[i - 1]));
            const double sign = partials[0] < 0.0 ? -1.0 : 1.0;
            return sign * cvz_sum([&mags](std::size_t k) { return mags[k]; },
                                  mags.size());
        }
    }
    throw std::logic_error("accelerate: unreachable");
}

SeriesResult alt_series_sum(const std::function<double(std::size_t)>& magnitude,
                            std::size_t n_terms) {
    if (n_terms < 2)
        throw std::invalid_argument("alt_series_sum: need at least 2 terms");
    const std::size_t n = std::min(n_terms, kCvzMaxTerms);
    const double value = cvz_sum(magnitude, n);
    const double a0 = std::abs(magnitude(0));
    // (3+sqrt 8)^-n bounds the truncation error for totally monotone a_k;
    // the eps term is the rounding floor of the weighted sum itself.
    const double geo =
        a0 * std::pow(3.0 + std::sqrt(8.0), -static_cast<double>(n));
    const double floor_ =
        8.0 * std::numeric_limits<double>::epsilon() * (std::abs(value) + a0);
    SeriesResult res;
    res.value = value;
    res.terms_used = n;
    res.tail_bound = geo + floor_;
    res.converged = std::isfinite(*res.tail_bound);
    return res;
}

double central_diff(const std::function<double(double)>& f, double x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("central_diff: h must be > 0");
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace translab::core
