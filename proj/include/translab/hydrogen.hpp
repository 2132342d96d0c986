#pragma once

#include <cstdint>
#include <vector>

// The variational chain connecting the Gaussian-trial-function energy
// ratio <H>_min / E_0 at angular momentum l to the Wallis partial product:
// the ratio formula, its n = l+1 reduction, and the executable form of the
// derivation that (pi/2) * ratio equals the Wallis partial.

namespace translab::hydrogen {

/// One tabulated point of the l -> infinity limit.
struct VariationalRow {
    std::uint64_t l = 0;
    std::uint64_t n = 1;  // always l + 1
    double ratio = 0.0;   // <H>_min / E_0, in (0, 1)
    double deviation = 0.0;  // ratio - 1
};

/// (l+1)^2/(l+3/2) * [Gamma(l+1)/Gamma(l+3/2)]^2, computed in the log
/// domain. Approaches 1 from below as l grows. Requires 0 <= l <= 1e7
/// (log-gamma range policy).
double variational_ratio(std::uint64_t l);

/// The n = l+1 reduction: Gamma(n+1)^2 / (Gamma(n+1/2) Gamma(n+3/2)),
/// n >= 1. Strictly increasing in n, bounded above by 1; asymptotically
/// 1 - 1/(4n).
double variational_ratio_reduced(std::uint64_t n);

/// (pi/2) * variational_ratio_reduced(n): equals wallis_partial(n) by the
/// Gamma-ratio product identities; this function is the executable form of
/// that derivation.
double wallis_from_hydrogen(std::uint64_t n);

/// Rows for l = 0, stride, 2*stride, ... <= l_max.
std::vector<VariationalRow> variational_ladder(std::uint64_t l_max,
                                               std::uint64_t stride);

}  // namespace translab::hydrogen
