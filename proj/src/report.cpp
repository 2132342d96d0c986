#include "translab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "translab/lerch.hpp"

namespace translab::report {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kLnSqrt2Pi = 0.91893853320467274178;

struct RegistryEntry {
    const char* id;
    const char* description;
    double default_tol;
    // Returns (lhs, rhs); residual checks report (max residual, 0).
    std::pair<double, double> (*eval)(const core::TruncationPolicy&);
};

std::pair<double, double> check_b1_bridge(const core::TruncationPolicy&) {
    double worst = 0.0;
    for (double x : {0.25, 0.5, 1.0, 2.0, 7.5})
        worst = std::max(worst,
                         std::abs(-lerch::hurwitz_zeta(0.0, x) - lerch::b1_poly(x)));
    return {worst, 0.0};
}

std::pair<double, double> check_corollary_vs_closed(
    const core::TruncationPolicy& policy) {
    double worst = 0.0;
    for (double u : {0.5, 1.0, 2.0, 3.5, 10.0}) {
        const auto series =
            lerch::dphi_ds_corollary(lerch::CorollaryArgs::make(-1.0, 0, u), policy);
        worst = std::max(worst, std::abs(series.value -
                                         lerch::dphi_ds_closed(lerch::ZSign::NegOne, u)));
    }
    return {worst, 0.0};
}

std::pair<double, double> check_duplication(const core::TruncationPolicy&) {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> dist(1e-6, 1e4);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i)
        worst = std::max(worst, products::legendre_duplication_residual(dist(rng)));
    return {worst, 0.0};
}

std::pair<double, double> check_exp_s(const core::TruncationPolicy&) {
    return {std::exp(products::s_constant(48)), kHalfPi};
}

std::pair<double, double> check_hydrogen_bridge(const core::TruncationPolicy&) {
    core::CompensatedProduct wallis;
    double worst = 0.0;
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        const double dn = static_cast<double>(n);
        wallis.multiply((4.0 * dn * dn) / ((2.0 * dn - 1.0) * (2.0 * dn + 1.0)));
        const double w = wallis.value();
        worst = std::max(worst,
                         std::abs(hydrogen::wallis_from_hydrogen(n) - w) / w);
    }
    return {worst, 0.0};
}

std::pair<double, double> check_lngamma_ds0(const core::TruncationPolicy&) {
    double worst = 0.0;
    for (double u : {0.5, 1.0, 2.0, 5.0, 20.0})
        worst = std::max(worst, std::abs(lerch::hurwitz_zeta_ds0(u) -
                                         (core::log_gamma(u) - kLnSqrt2Pi)));
    return {worst, 0.0};
}

std::pair<double, double> check_raising(const core::TruncationPolicy&) {
    double worst = 0.0;
    for (double z : {-0.5, -0.2, 0.0, 0.2, 0.5})
        for (double s : {1.0, 2.0, 3.0})
            for (double u : {0.5, 1.0, 2.0})
                worst = std::max(worst, lerch::raising_residual(z, s, u));
    return {worst, 0.0};
}

std::pair<double, double> check_ratio_routes(const core::TruncationPolicy&) {
    double worst = 0.0;
    for (auto variant :
         {products::GammaRatioVariant::Half, products::GammaRatioVariant::ThreeHalf})
        for (std::uint64_t n = 1; n <= 1000; ++n) {
            const auto r = products::gamma_ratio(variant, n);
            worst = std::max(worst, std::abs(r.lgamma_route - r.product_route) /
                                        std::abs(r.product_route));
        }
    return {worst, 0.0};
}

std::pair<double, double> check_sine(const core::TruncationPolicy&) {
    return {products::euler_sine_partial(kHalfPi, 100000), 2.0 / std::numbers::pi};
}

std::pair<double, double> check_wallis_limit(const core::TruncationPolicy&) {
    return {products::wallis_partial(1000000), kHalfPi};
}

// Registry, ordered by id. Default tolerances: exact identities at the
// residual level they can be computed to (with headroom), limit checks at
// their true O(1/N) gap. The sine partial sits 1/(2 pi n) above 2/pi,
// which at n = 1e5 is 1.59155e-6; the default allows that gap plus margin.
constexpr RegistryEntry kRegistry[] = {
    {"B1_BRIDGE", "-zeta(0, x) equals the first Bernoulli polynomial x - 1/2",
     1e-10, check_b1_bridge},
    {"COROLLARY_VS_CLOSED",
     "Guillera-Sondow double sum at z = -1 matches ln(Gamma(u/2)/(Gamma((u+1)/2) sqrt 2))",
     1e-9, check_corollary_vs_closed},
    {"DUPLICATION",
     "Legendre duplication residual over 1000 random points in (0, 1e4)", 1e-11,
     check_duplication},
    {"EXP_S_EQUALS_HALF_PI",
     "exp of the corollary constant s at depth 48 equals pi/2", 1e-10,
     check_exp_s},
    {"HYDROGEN_BRIDGE",
     "(pi/2) * variational ratio equals the Wallis partial, n = 1..1e4", 1e-11,
     check_hydrogen_bridge},
    {"LNGAMMA_DS0",
     "d zeta/ds at s = 0 equals ln(Gamma(u)/sqrt(2 pi)) for five u", 1e-8,
     check_lngamma_ds0},
    {"RAISING_IDENTITY",
     "Phi(z, s-1, u) = (u + z d/dz) Phi(z, s, u) over the 45-point grid", 1e-8,
     check_raising},
    {"RATIO_ROUTES",
     "Gamma-ratio log-gamma route matches the explicit product route, n = 1..1000",
     1e-12, check_ratio_routes},
    {"SINE_AT_HALF_PI",
     "Euler sine product at x = pi/2, n = 1e5 approaches 2/pi from above",
     1.6e-6, check_sine},
    {"WALLIS_LIMIT", "Wallis partial product at n = 1e6 approaches pi/2", 4.0e-7,
     check_wallis_limit},
};

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

nlohmann::json to_json(const IdentityCheck& c) {
    return {{"id", c.id},         {"description", c.description},
            {"lhs", c.lhs},       {"rhs", c.rhs},
            {"abs_err", c.abs_err}, {"tol", c.tol},
            {"pass", c.pass}};
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> registry_ids() {
    std::vector<std::string> ids;
    for (const auto& entry : kRegistry) ids.emplace_back(entry.id);
    return ids;
}

SuiteReport run_identity_suite(const std::map<std::string, double>& tol_overrides,
                               const core::TruncationPolicy& policy,
                               unsigned jobs) {
    policy.validate();
    for (const auto& [id, tol] : tol_overrides) {
        const bool known = std::any_of(std::begin(kRegistry), std::end(kRegistry),
                                       [&](const RegistryEntry& e) { return id == e.id; });
        if (!known) throw UsageError("unknown check id in tolerance override: " + id);
        if (!(tol > 0.0)) throw UsageError("tolerance override must be positive: " + id);
    }

    const std::size_t n = std::size(kRegistry);
    std::vector<std::pair<double, double>> results(n);
    if (jobs > 1) {
        std::vector<std::future<std::pair<double, double>>> futures;
        futures.reserve(n);
        for (const auto& entry : kRegistry)
            futures.push_back(std::async(std::launch::async, entry.eval, policy));
        for (std::size_t i = 0; i < n; ++i) results[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < n; ++i) results[i] = kRegistry[i].eval(policy);
    }

    SuiteReport report;
    report.config.tol_overrides = tol_overrides;
    report.config.max_terms = policy.max_terms;
    report.config.tail_tol = policy.tail_tol;
    report.timestamp = iso8601_utc_now();
    report.all_pass = true;
    for (std::size_t i = 0; i < n; ++i) {
        IdentityCheck c;
        c.id = kRegistry[i].id;
        c.description = kRegistry[i].description;
        c.lhs = results[i].first;
        c.rhs = results[i].second;
        c.abs_err = std::abs(c.lhs - c.rhs);
        const auto it = tol_overrides.find(c.id);
        c.tol = it != tol_overrides.end() ? it->second : kRegistry[i].default_tol;
        c.pass = c.abs_err <= c.tol;
        report.all_pass = report.all_pass && c.pass;
        report.checks.push_back(std::move(c));
    }
    return report;
}

void emit(const SuiteReport& report, Format format, std::ostream& out) {
    if (format == Format::Csv) {
        out << "id,description,lhs,rhs,abs_err,tol,pass\n";
        for (const auto& c : report.checks) {
            out << csv_quote(c.id) << ',' << csv_quote(c.description) << ','
                << format_double(c.lhs) << ',' << format_double(c.rhs) << ','
                << format_double(c.abs_err) << ',' << format_double(c.tol) << ','
                << (c.pass ? "true" : "false") << '\n';
        }
        return;
    }
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) j["checks"].push_back(to_json(c));
    j["all_pass"] = report.all_pass;
    j["config"] = {{"tol_overrides", report.config.tol_overrides},
                   {"max_terms", report.config.max_terms},
                   {"tail_tol", report.config.tail_tol}};
    if (!report.timestamp.empty()) j["timestamp"] = report.timestamp;
    out << j.dump(2) << '\n';
}

void emit(std::span<const products::LadderRow> rows, Format format,
          std::ostream& out) {
    if (format == Format::Csv) {
        out << "index,partial,deviation,target\n";
        for (const auto& r : rows)
            out << r.index << ',' << format_double(r.partial) << ','
                << format_double(r.deviation) << ',' << format_double(r.target)
                << '\n';
        return;
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
        j.push_back({{"index", r.index},
                     {"partial", r.partial},
                     {"deviation", r.deviation},
                     {"target", r.target}});
    out << j.dump(2) << '\n';
}

void emit(std::span<const hydrogen::VariationalRow> rows, Format format,
          std::ostream& out) {
    if (format == Format::Csv) {
        out << "l,n,ratio,deviation\n";
        for (const auto& r : rows)
            out << r.l << ',' << r.n << ',' << format_double(r.ratio) << ','
                << format_double(r.deviation) << '\n';
        return;
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
        j.push_back({{"l", r.l}, {"n", r.n}, {"ratio", r.ratio},
                     {"deviation", r.deviation}});
    out << j.dump(2) << '\n';
}

void emit(const core::SeriesResult& result, Format format, std::ostream& out) {
    if (format == Format::Csv) {
        out << "value,terms_used,tail_bound,converged\n";
        out << format_double(result.value) << ',' << result.terms_used << ','
            << (result.tail_bound ? format_double(*result.tail_bound) : "unknown")
            << ',' << (result.converged ? "true" : "false") << '\n';
        return;
    }
    nlohmann::json j{{"value", result.value},
                     {"terms_used", result.terms_used},
                     {"converged", result.converged}};
    if (result.tail_bound)
        j["tail_bound"] = *result.tail_bound;
    else
        j["tail_bound"] = "unknown";
    out << j.dump(2) << '\n';
}

template <typename T>
void emit_to(const T& value, Format format, const std::string& path) {
    if (path.empty() || path == "-") {
        emit(value, format, std::cout);
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open for writing: " + path);
    emit(value, format, file);
    if (!file) throw std::runtime_error("write failed: " + path);
}

template void emit_to(const SuiteReport&, Format, const std::string&);
template void emit_to(const core::SeriesResult&, Format, const std::string&);
template void emit_to(const std::vector<products::LadderRow>&, Format,
                      const std::string&);
template void emit_to(const std::vector<hydrogen::VariationalRow>&, Format,
                      const std::string&);

}  // namespace translab::report
