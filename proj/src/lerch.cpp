#include "translab/lerch.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace translab::lerch {

namespace {

constexpr double kLnSqrt2Pi = 0.91893853320467274178;
constexpr double kHalfLn2 = 0.34657359027997265471;

// Bernoulli numbers B_2 .. B_20 for the Euler-Maclaurin corrections.
const std::vector<double>& bernoulli_even_10() {
    static const std::vector<double> b = core::bernoulli_numbers(10);
    return b;
}

constexpr int kEmCorrections = 10;

struct EmResult {
    double value = 0.0;
    std::size_t direct_terms = 0;
    double err_est = 0.0;
};

// Direct-sum split of the Euler-Maclaurin formula. For s >= 0 the spec
// choice M = max(ceil u, 16) + ceil s keeps the K-th correction far below
// 1e-12. For s < 0 the direct terms grow like (u+k)^|s| and cancel against
// the integral term, so the split point must stay small: the rounding
// floor is ~eps * (u+M)^{|s|+1}, which caps u+M near 8 for |s| <= 5.
std::size_t em_split(double s, double u) {
    const double cu = std::ceil(u);
    if (s >= 0.0)
        return static_cast<std::size_t>(std::max(cu, 16.0) + std::ceil(s));
    const double x_target = std::max(8.0, (-s + 22.0) / 4.0);
    return static_cast<std::size_t>(std::max(0.0, std::ceil(x_target - u)));
}

EmResult hurwitz_zeta_em(double s, double u) {
    const std::size_t m = em_split(s, u);
    core::KahanSum sum;
    for (std::size_t k = 0; k < m; ++k)
        sum.add(std::pow(u + static_cast<double>(k), -s));
    const double x = u + static_cast<double>(m);
    sum.add(std::pow(x, 1.0 - s) / (s - 1.0));
    sum.add(0.5 * std::pow(x, -s));

    const auto& b2 = bernoulli_even_10();
    double poch = s;                    // (s)_{2j-1}
    double fact = 2.0;                  // (2j)!
    double xp = std::pow(x, -s - 1.0);  // x^{-s-2j+1}
    double last = 0.0;
    for (int j = 1; j <= kEmCorrections; ++j) {
        last = b2[static_cast<std::size_t>(j - 1)] / fact * poch * xp;
        sum.add(last);
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        xp /= x * x;
    }
    EmResult res;
    res.value = sum.value();
    res.direct_terms = m;
    res.err_est = 2.0 * std::abs(last) +
                  8.0 * std::numeric_limits<double>::epsilon() *
                      std::max(1.0, std::abs(res.value));
    return res;
}

// ---------------------------------------------------------------------
// Direct summation inside the unit disc
// ---------------------------------------------------------------------

// Tail bound after summing terms 0..n: remaining terms are dominated by a
// geometric series. For s >= 0, (u+k)^-s only shrinks the tail; for s < 0
// the polynomial factor is majorized by its value at the first omitted
// index times the (still geometric) worst-case growth ratio.
std::optional<double> inside_tail_bound(double az, double s, double u,
                                        std::size_t n, double az_next) {
    const double next_idx = u + static_cast<double>(n) + 1.0;
    if (s >= 0.0)
        return az_next / ((1.0 - az) * std::pow(next_idx, s));
    const double t_next = az_next * std::pow(next_idx, -s);
    const double rho = az * std::pow((next_idx + 1.0) / next_idx, -s);
    if (rho >= 1.0) return std::nullopt;
    return t_next / (1.0 - rho);
}

core::SeriesResult phi_inside(double z, double s, double u,
                              const core::TruncationPolicy& policy) {
    const double az = std::abs(z);
    core::KahanSum sum;
    core::SeriesResult res;
    double zk = 1.0;  // z^k
    for (std::size_t k = 0; k < policy.max_terms; ++k) {
        sum.add(zk * std::pow(u + static_cast<double>(k), -s));
        res.terms_used = k + 1;
        zk *= z;
        res.tail_bound = inside_tail_bound(az, s, u, k, std::abs(zk));
        if (res.tail_bound && *res.tail_bound <= policy.tail_tol) {
            res.converged = true;
            break;
        }
    }
    res.value = sum.value();
    return res;
}

// Term-wise derivative sum_{k>=1} k z^{k-1} / (u+k)^s for |z| < 1, used by
// raising_residual. Same geometric tail logic with the extra factor k.
double phi_dz_inside(double z, double s, double u,
                     const core::TruncationPolicy& policy) {
    const double az = std::abs(z);
    core::KahanSum sum;
    double zk = 1.0;  // z^{k-1}
    for (std::size_t k = 1; k < policy.max_terms; ++k) {
        const double kd = static_cast<double>(k);
        const double t = kd * zk * std::pow(u + kd, -s);
        sum.add(t);
        zk *= z;
        const double ratio = az * ((kd + 2.0) / (kd + 1.0)) *
                             (s >= 0.0 ? 1.0
                                       : std::pow((u + kd + 2.0) / (u + kd + 1.0), -s));
        if (k >= 8 && ratio < 1.0) {
            const double t_next =
                (kd + 1.0) * std::abs(zk) * std::pow(u + kd + 1.0, -s);
            if (t_next / (1.0 - ratio) <= policy.tail_tol) break;
        }
    }
    return sum.value();
}

// ---------------------------------------------------------------------
// Guillera-Sondow corollary machinery
// ---------------------------------------------------------------------

// Inner finite difference sum_{k=0..n} (-1)^{k+1} C(n,k) ln(u+k); exact
// binomials keep the 2^n cancellation within the eps * ln(u+n) budget once
// the outer (z/(1-z))^n weight is applied.
double inner_log_difference(int n, double u) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double c = static_cast<double>(
            core::binomial_exact(static_cast<unsigned>(n), static_cast<unsigned>(k)));
        const double term = c * std::log(u + static_cast<double>(k));
        s += (k % 2 == 0) ? -term : term;
    }
    return s;
}

// Stirling numbers of the second kind S(i, j) for i, j <= 4, used to
// expand (u + z d/dz)^m = sum_j [z^j sum_i C(m,i) u^{m-i} S(i,j)] d^j/dz^j.
constexpr double kStirling2[5][5] = {
    {1, 0, 0, 0, 0},
    {0, 1, 0, 0, 0},
    {0, 1, 1, 0, 0},
    {0, 1, 3, 1, 0},
    {0, 1, 7, 6, 1},
};

double falling(double n, int r) {
    double v = 1.0;
    for (int i = 0; i < r; ++i) v *= n - i;
    return v;
}

double rising(double a, int q) {
    double v = 1.0;
    for (int i = 0; i < q; ++i) v *= a + i;
    return v;
}

// j-th z-derivative of h_n(z) = (1-z)^{-1} (-z/(1-z))^n
//                             = (-1)^n z^n (1-z)^{-(n+1)}.
double h_deriv(int n, double z, int j) {
    const double omz = 1.0 - z;
    double acc = 0.0;
    const int rmax = std::min(j, n);
    for (int r = 0; r <= rmax; ++r) {
        const double binom = static_cast<double>(
            core::binomial_exact(static_cast<unsigned>(j), static_cast<unsigned>(r)));
        acc += binom * falling(static_cast<double>(n), r) *
               rising(static_cast<double>(n) + 1.0, j - r) *
               std::pow(z, static_cast<double>(n - r)) *
               std::pow(omz, -static_cast<double>(n + 1 + j - r));
    }
    return (n % 2 == 0) ? acc : -acc;
}

constexpr int kCorollaryMaxOuter = 62;  // exact-binomial budget

}  // namespace

Region classify(double z) {
    if (z == -1.0) return Region::BoundaryNeg;
    if (z == 1.0) return Region::BoundaryPos;
    if (std::abs(z) < 1.0) return Region::Inside;
    throw std::domain_error("lerch: |z| > 1 is outside the supported region");
}

LerchArgs LerchArgs::make(double z, double s, double u) {
    if (!(u > 0.0)) throw std::domain_error("lerch: u must be positive");
    if (std::isnan(z) || std::isnan(s))
        throw std::domain_error("lerch: arguments must not be NaN");
    return LerchArgs{z, s, u, classify(z)};
}

CorollaryArgs CorollaryArgs::make(double z, int m, double u) {
    if (!(z < 0.5))
        throw std::domain_error(
            "dphi_ds_corollary: hypothesis violation, requires z < 1/2");
    if (m < 0 || m > 4)
        throw std::domain_error("dphi_ds_corollary: m must be in [0, 4]");
    if (!(u > 0.0)) throw std::domain_error("dphi_ds_corollary: u must be positive");
    return CorollaryArgs{z, m, u};
}

core::SeriesResult phi(const LerchArgs& args, const core::TruncationPolicy& policy) {
    policy.validate();
    if (!(args.u > 0.0)) throw std::domain_error("phi: u must be positive");
    switch (args.region) {
        case Region::Inside:
            return phi_inside(args.z, args.s, args.u, policy);
        case Region::BoundaryNeg: {
            // Alternating series: route through CVZ with enough terms for the
            // geometric 5.83^-n bound to clear the policy tolerance.
            const double a0 = std::pow(args.u, -args.s);
            const double need =
                std::log(std::max(a0, 1.0) / policy.tail_tol) / std::log(3.0 + std::sqrt(8.0));
            std::size_t n = static_cast<std::size_t>(std::max(4.0, std::ceil(need) + 2.0));
            n = std::min(n, policy.max_terms);
            const double s = args.s;
            const double u = args.u;
            auto res = core::alt_series_sum(
                [s, u](std::size_t k) {
                    return std::pow(u + static_cast<double>(k), -s);
                },
                std::max<std::size_t>(n, 2));
            res.converged = res.tail_bound && *res.tail_bound <= policy.tail_tol;
            return res;
        }
        case Region::BoundaryPos: {
            if (args.s <= 1.0)
                throw std::domain_error(
                    "phi: z = 1 with s <= 1 needs analytic continuation; "
                    "use hurwitz_zeta");
            const EmResult em = hurwitz_zeta_em(args.s, args.u);
            core::SeriesResult res;
            res.value = em.value;
            res.terms_used = em.direct_terms;
            res.tail_bound = em.err_est;
            res.converged = em.err_est <= policy.tail_tol;
            return res;
        }
    }
    throw std::logic_error("phi: unreachable");
}

double hurwitz_zeta(double s, double u) {
    if (s == 1.0) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (!(u > 0.0)) throw std::domain_error("hurwitz_zeta: u must be positive");
    return hurwitz_zeta_em(s, u).value;
}

double hurwitz_zeta_ds0(double u) {
    if (!(u > 0.0)) throw std::domain_error("hurwitz_zeta_ds0: u must be positive");
    // Term-wise d/ds of the Euler-Maclaurin formula at s = 0. Each direct
    // term (u+k)^-s differentiates to -ln(u+k); the integral, half-term and
    // correction terms differentiate in closed form (each correction's
    // Pochhammer factor vanishes at s = 0, leaving its derivative
    // (2j-2)!).
    const std::size_t m =
        static_cast<std::size_t>(std::max(std::ceil(u), 16.0));
    core::KahanSum sum;
    for (std::size_t k = 0; k < m; ++k)
        sum.add(-std::log(u + static_cast<double>(k)));
    const double x = u + static_cast<double>(m);
    const double lx = std::log(x);
    sum.add(x * (lx - 1.0));
    sum.add(-0.5 * lx);
    const auto& b2 = bernoulli_even_10();
    double xp = 1.0 / x;  // x^{1-2j}
    for (int j = 1; j <= kEmCorrections; ++j) {
        sum.add(b2[static_cast<std::size_t>(j - 1)] / ((2.0 * j) * (2.0 * j - 1.0)) * xp);
        xp /= x * x;
    }
    return sum.value();
}

core::SeriesResult dphi_ds_corollary(const CorollaryArgs& args,
                                     const core::TruncationPolicy& policy) {
    policy.validate();
    // Re-validate (callers may have aggregate-initialized the struct).
    CorollaryArgs::make(args.z, args.m, args.u);

    const double z = args.z;
    const double u = args.u;
    const int m = args.m;
    const double w_ratio = std::abs(z / (1.0 - z));

    // beta_j(u, z): operator expansion coefficients (constant across n).
    std::array<double, 5> beta{};
    for (int j = 0; j <= m; ++j) {
        double acc = 0.0;
        for (int i = j; i <= m; ++i)
            acc += static_cast<double>(core::binomial_exact(
                       static_cast<unsigned>(m), static_cast<unsigned>(i))) *
                   std::pow(u, static_cast<double>(m - i)) * kStirling2[i][j];
        beta[static_cast<std::size_t>(j)] = acc * (j > 0 ? std::pow(z, static_cast<double>(j)) : 1.0);
    }

    const int outer_cap = static_cast<int>(std::min<std::size_t>(
        policy.max_terms, static_cast<std::size_t>(kCorollaryMaxOuter + 1)));
    core::KahanSum sum;
    core::SeriesResult res;
    for (int n = 0; n < outer_cap; ++n) {
        const double inner = inner_log_difference(n, u);
        double op = 0.0;
        for (int j = 0; j <= m; ++j)
            op += beta[static_cast<std::size_t>(j)] * h_deriv(n, z, j);
        const double term = inner * op;
        sum.add(term);
        res.terms_used = static_cast<std::size_t>(n + 1);
        // For m >= 1 the operator adds polynomial-in-n factors, so widen
        // the geometric ratio by their worst-case per-step growth.
        const double q_eff =
            m == 0 ? w_ratio
                   : w_ratio * std::pow((static_cast<double>(n) + 6.0) /
                                            (static_cast<double>(n) + 1.0),
                                        m + 1);
        if (q_eff < 1.0) {
            res.tail_bound = std::abs(term) * q_eff / (1.0 - q_eff) +
                             8.0 * std::numeric_limits<double>::epsilon() *
                                 (std::abs(sum.value()) + 1.0);
            // Early terms can vanish (n = 0, u = 1 gives ln 1 = 0), so
            // require a minimum depth before trusting the magnitude test.
            if (n >= 8 && std::abs(term) < policy.tail_tol &&
                *res.tail_bound <= policy.tail_tol) {
                res.converged = true;
                break;
            }
        }
    }
    res.value = sum.value();
    return res;
}

double dphi_ds_closed(ZSign z_sign, double u) {
    if (!(u > 0.0)) throw std::domain_error("dphi_ds_closed: u must be positive");
    if (z_sign == ZSign::PosOne) return core::log_gamma(u) - kLnSqrt2Pi;
    return core::log_gamma(u / 2.0) - core::log_gamma((u + 1.0) / 2.0) - kHalfLn2;
}

double b1_poly(double x) { return x - 0.5; }

double raising_residual(double z, double s, double u) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error(
            "raising_residual: |z| < 1 required for the analytic-derivative path");
    if (!(u > 0.0)) throw std::domain_error("raising_residual: u must be positive");
    const core::TruncationPolicy tight{200000, 1e-13};
    const double lhs = phi(LerchArgs::make(z, s - 1.0, u), tight).value;
    const double val = phi(LerchArgs::make(z, s, u), tight).value;
    const double dz = phi_dz_inside(z, s, u, tight);
    return std::abs(lhs - (u * val + z * dz));
}

}  // namespace translab::lerch
