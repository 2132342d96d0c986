#pragma once

#include "translab/core_numerics.hpp"

// Evaluation of the Lerch transcendent Phi(z, s, u) = sum_k z^k / (u+k)^s
// on the real axis, in three regimes:
//   |z| < 1      direct summation with a rigorous geometric tail bound
//   z = -1       CVZ-accelerated alternating summation
//   z = +1       Hurwitz zeta, Euler-Maclaurin continued past s = 1
// plus the s-derivative at nonpositive integer s via the Guillera-Sondow
// double sum, and the closed-form special values at s = 0.

namespace translab::lerch {

enum class Region { Inside, BoundaryNeg, BoundaryPos };

/// Classify z: |z| < 1 -> Inside, z == -1 -> BoundaryNeg, z == +1 ->
/// BoundaryPos. Throws std::domain_error for |z| > 1.
Region classify(double z);

/// The (z, s, u) argument triple. u must be positive (the series
/// converges for any real u > 0); region is derived from z.
struct LerchArgs {
    double z = 0.0;
    double s = 0.0;
    double u = 1.0;
    Region region = Region::Inside;

    static LerchArgs make(double z, double s, double u);
};

/// Arguments of the Guillera-Sondow corollary: requires z < 1/2 (the real
/// restriction of the Re z < 1/2 hypothesis) and 0 <= m <= 4.
struct CorollaryArgs {
    double z = 0.0;
    int m = 0;
    double u = 1.0;

    static CorollaryArgs make(double z, int m, double u);
};

enum class ZSign { PosOne, NegOne };

/// Phi(z, s, u) under a truncation policy.
///
/// Inside: direct compensated summation; the reported tail_bound is
///   |z|^{N+1} / ((1-|z|) (u+N+1)^s) for s >= 0, and the ratio-test
///   geometric bound with the polynomial factor majorized over the tail
///   for s < 0.
/// BoundaryNeg: alternating CVZ acceleration (any real s).
/// BoundaryPos: requires s > 1 and delegates to hurwitz_zeta; asking for
///   s <= 1 here throws (use hurwitz_zeta, which continues past s = 1).
core::SeriesResult phi(const LerchArgs& args, const core::TruncationPolicy& policy);

/// Hurwitz zeta(s, u) for s != 1, u > 0, by the Euler-Maclaurin formula:
/// direct sum of the first M terms, then integral + half-term + Bernoulli
/// corrections.
double hurwitz_zeta(double s, double u);

/// d/ds zeta(s, u) at s = 0, by term-wise s-differentiation of the same
/// Euler-Maclaurin formula. Equals ln(Gamma(u)/sqrt(2 pi)), but is
/// computed without any Gamma evaluation, which makes it an independent
/// route to that identity.
double hurwitz_zeta_ds0(double u);

/// dPhi/ds(z, -m, u) via the Guillera-Sondow corollary
///   (u + z d/dz)^m sum_n (1-z)^{-1} (-z/(1-z))^n
///                  sum_{k=0..n} (-1)^{k+1} C(n,k) ln(u+k),
/// with the operator applied in closed form per outer term. Inner sums use
/// exact binomials (outer index capped at 62); the outer series converges
/// geometrically with ratio |z/(1-z)|, so inputs with |z/(1-z)| near 1
/// may legitimately come back with converged == false.
core::SeriesResult dphi_ds_corollary(const CorollaryArgs& args,
                                     const core::TruncationPolicy& policy);

/// The closed forms for dPhi/ds(+-1, 0, u):
///   PosOne: ln Gamma(u) - ln sqrt(2 pi)
///   NegOne: ln Gamma(u/2) - ln Gamma((u+1)/2) - (ln 2)/2
double dphi_ds_closed(ZSign z_sign, double u);

/// First Bernoulli polynomial B_1(x) = x - 1/2 (= -Phi(1, 0, x)).
double b1_poly(double x);

/// |Phi(z, s-1, u) - (u Phi(z, s, u) + z dPhi/dz(z, s, u))| with the
/// z-derivative summed term-wise; |z| < 1 required for that path.
double raising_residual(double z, double s, double u);

}  // namespace translab::lerch
