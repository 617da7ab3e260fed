#pragma once

#include "quotmot/config.hpp"
#include "quotmot/motive.hpp"
#include "quotmot/nested.hpp"
#include "quotmot/series.hpp"

#include <algorithm>
#include <vector>

namespace quotmot {

// 1 + s_1 q + s_2 q^2 + ... in one variable, truncated at q^cap.
inline truncated_series<universal_motive> kapranov_zeta(int cap) {
    if (cap < 0) throw parameter_error("kapranov_zeta: cap must be >= 0");
    const cap_vector c = cap_vector::uniform(1, cap);
    auto z = truncated_series<universal_motive>::one(c);
    for (int n = 1; n <= cap; ++n)
        z = z + truncated_series<universal_motive>::monomial(
                    universal_motive::sym_class(n),
                    exponent_vector(std::vector<int>{n}), c);
    return z;
}

// The zeta factor for step alpha and level i (both 1-based): the univariate
// zeta with q sent to L^{alpha-1} q_i q_{i+1} ... q_d. The source is expanded
// only as far as survives the target cap.
inline truncated_series<universal_motive> shifted_zeta(int alpha, int i,
                                                       const quot_series_config& cfg) {
    if (alpha < 1 || alpha > cfg.rank) throw parameter_error("shifted_zeta: alpha out of range");
    if (i < 1 || i > cfg.depth) throw parameter_error("shifted_zeta: level out of range");
    int src_cap = cfg.cap[i - 1];
    for (int j = i; j < cfg.depth; ++j) src_cap = std::min(src_cap, cfg.cap[j]);
    return substitute(kapranov_zeta(src_cap), universal_motive::lefschetz(alpha - 1),
                      suffix_exponent(cfg.depth, i), cfg.cap);
}

// Product of all r*d shifted zeta factors; the generating series of the
// nested punctual quotient classes.
inline truncated_series<universal_motive> main_series(const quot_series_config& cfg) {
    std::vector<truncated_series<universal_motive>> factors;
    factors.reserve(static_cast<std::size_t>(cfg.rank) * static_cast<std::size_t>(cfg.depth));
    for (int alpha = 1; alpha <= cfg.rank; ++alpha)
        for (int i = 1; i <= cfg.depth; ++i) factors.push_back(shifted_zeta(alpha, i, cfg));
    return product_of(cfg.cap, factors);
}

// Coefficient of q_1^{n_1} ... q_d^{n_d} in the product; n must lie inside
// the cap of cfg.
inline universal_motive nested_coefficient(const quot_series_config& cfg, const nested_tuple& n) {
    if (n.depth() != cfg.depth)
        throw dimension_error("nested_coefficient: tuple depth does not match config");
    return main_series(cfg).coefficient(n.to_exponents());
}

} // namespace quotmot
