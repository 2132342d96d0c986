#include "translab/hydrogen.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "translab/core_numerics.hpp"

namespace translab::hydrogen {

namespace {

constexpr std::uint64_t kMaxL = 10000000;  // log-gamma range policy

// ln of Gamma(n+1)^2 / (Gamma(n+1/2) Gamma(n+3/2)) as two stable ratio
// logs; never forms a large ln Gamma value, so the ~1/(4n) result survives
// at full precision even at n = 1e7.
double log_reduced_ratio(double n) {
    return -(core::log_gamma_diff(n + 1.0, 0.5) +
             core::log_gamma_diff(n + 1.0, -0.5));
}

}  // namespace

double variational_ratio(std::uint64_t l) {
    if (l > kMaxL)
        throw std::domain_error("variational_ratio: l exceeds the 1e7 range policy");
    const double ld = static_cast<double>(l);
    // (l+1)^2 / (l+3/2) * [Gamma(l+1)/Gamma(l+3/2)]^2, all in log domain.
    const double log_gamma_part = -2.0 * core::log_gamma_diff(ld + 1.0, 0.5);
    return std::exp(2.0 * std::log(ld + 1.0) - std::log(ld + 1.5) +
                    log_gamma_part);
}

double variational_ratio_reduced(std::uint64_t n) {
    if (n < 1)
        throw std::domain_error("variational_ratio_reduced: n must be >= 1");
    const double nd = static_cast<double>(n);
    // Bridging recurrence (n+1/2) Gamma(n+1/2) = Gamma(n+3/2), asserted on
    // the same log-gamma machinery the ratio uses.
    assert(std::abs(core::log_gamma_diff(nd + 0.5, 1.0) - std::log(nd + 0.5)) <
           1e-12);
    return std::exp(log_reduced_ratio(nd));
}

double wallis_from_hydrogen(std::uint64_t n) {
    return (std::numbers::pi / 2.0) * variational_ratio_reduced(n);
}

std::vector<VariationalRow> variational_ladder(std::uint64_t l_max,
                                               std::uint64_t stride) {
    if (stride < 1)
        throw std::domain_error("variational_ladder: stride must be >= 1");
    std::vector<VariationalRow> rows;
    for (std::uint64_t l = 0;; l += stride) {
        if (l > l_max) break;
        const double ratio = variational_ratio(l);
        rows.push_back({l, l + 1, ratio, ratio - 1.0});
        if (l_max - l < stride) break;  // avoid overflow on l += stride
    }
    return rows;
}

}  // namespace translab::hydrogen
