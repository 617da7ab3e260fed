#pragma once

#include "quotmot/bb_oracle.hpp"
#include "quotmot/closed_forms.hpp"
#include "quotmot/config.hpp"
#include "quotmot/exp.hpp"
#include "quotmot/measures.hpp"
#include "quotmot/series.hpp"
#include "quotmot/zeta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quotmot {

struct check_result {
    std::string name;
    bool passed;
    std::string detail; // first differing coefficient when failed
};

// Walks both supports in graded-lex order and reports the first coefficient
// where the series disagree.
template <coefficient_ring R>
std::optional<std::string> first_difference(const truncated_series<R>& a,
                                            const truncated_series<R>& b) {
    if (a.cap() != b.cap())
        return "cap mismatch: " + a.cap().to_string() + " vs " + b.cap().to_string();
    const exponent_vector::graded_lex less;
    auto report = [](const exponent_vector& e, const R& lhs, const R& rhs) {
        return "n=" + e.to_string() + " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
    };
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() ||
            (ia != a.terms().end() && less(ia->first, ib->first))) {
            return report(ia->first, ia->second, R::zero());
        }
        if (ia == a.terms().end() || less(ib->first, ia->first)) {
            return report(ib->first, R::zero(), ib->second);
        }
        if (!(ia->second == ib->second)) return report(ia->first, ia->second, ib->second);
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

// Strata sum against the zeta product.
inline check_result check_strata_sum(const quot_series_config& cfg) {
    const auto diff = first_difference(oracle_series(cfg), main_series(cfg));
    return {"strata-sum", !diff.has_value(), diff.value_or("")};
}

// Exponential reformulation against the zeta product.
inline check_result check_exp_reformulation(const quot_series_config& cfg) {
    const auto lhs = exp_plus(quot_exp_argument(cfg.rank, cfg.depth), cfg.cap);
    const auto diff = first_difference(lhs, main_series(cfg));
    return {"exponential", !diff.has_value(), diff.value_or("")};
}

// The three specializations agree with each other and with the direct Euler
// route, coefficient by coefficient on the main series.
inline check_result check_measure_factorization(const quot_series_config& cfg, int genus) {
    const auto series = main_series(cfg);
    const auto hd = lift_hodge_deligne(series, genus);

    const auto sp_direct = lift_signed_poincare(series, genus);
    const auto sp_via_hd =
        map_coefficients(hd, [](const bivariate_poly& p) { return collapse_uv_to_t(p); });
    if (auto diff = first_difference(sp_direct, sp_via_hd))
        return {"measures", false, "signed Poincare: " + *diff};

    const auto eu_direct_series = lift_euler(series, genus);
    const auto eu_via_hd =
        map_coefficients(hd, [](const bivariate_poly& p) { return evaluate_uv_at_one(p); });
    if (auto diff = first_difference(eu_direct_series, eu_via_hd))
        return {"measures", false, "Euler via u=v=1: " + *diff};

    const auto eu_short = map_coefficients(
        series, [genus](const universal_motive& m) { return apply_euler_direct(m, genus); });
    if (auto diff = first_difference(eu_short, eu_direct_series))
        return {"measures", false, "Euler short route: " + *diff};

    return {"measures", true, ""};
}

// Coefficients supported on (0,...,0,n) match the one-variable series of the
// same rank.
inline check_result check_depth_one_reduction(const quot_series_config& cfg) {
    const int last_cap = cfg.cap[cfg.depth - 1];
    const auto full = main_series(cfg);
    const auto reference = main_series(quot_series_config::uniform(cfg.rank, 1, last_cap));
    for (int n = 0; n <= last_cap; ++n) {
        std::vector<int> e(static_cast<std::size_t>(cfg.depth), 0);
        e.back() = n;
        const exponent_vector full_e(std::move(e));
        const universal_motive lhs = full.coefficient(full_e);
        const universal_motive rhs = reference.coefficient(exponent_vector(std::vector<int>{n}));
        if (!(lhs == rhs))
            return {"depth-one", false,
                    "n=" + full_e.to_string() + " lhs=" + lhs.to_string() +
                        " rhs=" + rhs.to_string()};
    }
    return {"depth-one", true, ""};
}

inline std::vector<check_result> run_all_checks(const quot_series_config& cfg, int genus) {
    return {check_strata_sum(cfg), check_exp_reformulation(cfg),
            check_measure_factorization(cfg, genus), check_depth_one_reduction(cfg)};
}

} // namespace quotmot
