#pragma once

#include "quotmot/bigint.hpp"
#include "quotmot/config.hpp"
#include "quotmot/polynomials.hpp"
#include "quotmot/series.hpp"

namespace quotmot {

// Expansion of the rational product
//   prod_{alpha=1..r} prod_{i=1..d}
//     (1 - u^alpha v^{alpha-1} m_i)^g (1 - u^{alpha-1} v^alpha m_i)^g
//     / ((1 - u^{alpha-1} v^{alpha-1} m_i) (1 - u^alpha v^alpha m_i))
// with m_i = q_i q_{i+1} ... q_d, truncated by the cap of cfg.
inline truncated_series<bivariate_poly> hodge_deligne_closed_form(const quot_series_config& cfg,
                                                                  int genus) {
    if (genus < 0) throw parameter_error("hodge_deligne_closed_form: genus must be >= 0");
    using S = truncated_series<bivariate_poly>;
    const cap_vector& cap = cfg.cap;
    const S one = S::one(cap);
    auto uv_factor = [&](int u_exp, int v_exp, int i) {
        return one - S::monomial(bivariate_poly::monomial(bigint(1), u_exp, v_exp),
                                 suffix_exponent(cfg.depth, i), cap);
    };
    S result = one;
    for (int alpha = 1; alpha <= cfg.rank; ++alpha) {
        for (int i = 1; i <= cfg.depth; ++i) {
            result = result * pow(uv_factor(alpha, alpha - 1, i), genus);
            result = result * pow(uv_factor(alpha - 1, alpha, i), genus);
            result = result * uv_factor(alpha - 1, alpha - 1, i).inverse();
            result = result * uv_factor(alpha, alpha, i).inverse();
        }
    }
    return result;
}

// Expansion of prod_{i=1..d} (1 - q_i q_{i+1} ... q_d)^{-r(2-2g)}; genus >= 2
// makes the exponent positive, so the product is then a polynomial.
inline truncated_series<bigint> euler_closed_form(const quot_series_config& cfg, int genus) {
    if (genus < 0) throw parameter_error("euler_closed_form: genus must be >= 0");
    using S = truncated_series<bigint>;
    const cap_vector& cap = cfg.cap;
    S result = S::one(cap);
    for (int i = 1; i <= cfg.depth; ++i) {
        const S factor =
            S::one(cap) - S::monomial(bigint(1), suffix_exponent(cfg.depth, i), cap);
        result = result * pow(factor, -cfg.rank * (2 - 2 * genus));
    }
    return result;
}

} // namespace quotmot
