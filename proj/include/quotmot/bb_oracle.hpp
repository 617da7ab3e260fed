#pragma once

#include "quotmot/bigint.hpp"
#include "quotmot/config.hpp"
#include "quotmot/motive.hpp"
#include "quotmot/nested.hpp"
#include "quotmot/series.hpp"

#include <algorithm>

namespace quotmot {

// Class of the punctual nesting stratum for one tuple: the product of
// sym classes of the successive differences.
inline universal_motive hilb_class(const nested_tuple& n) {
    const diff_tuple l = to_diffs(n);
    universal_motive r = universal_motive::one();
    for (int i = 0; i < l.depth(); ++i) r = r * universal_motive::sym_class(l[i]);
    return r;
}

// Class of the attracting cell indexed by one decomposition: an L-weight
// from the filtration steps times the product of the per-step classes.
inline universal_motive stratum_class(const decomposition& dec) {
    int weight = 0;
    for (int a = 0; a < dec.rank(); ++a) weight += a * dec.part(a).last();
    universal_motive r = universal_motive::lefschetz(weight);
    for (int a = 0; a < dec.rank(); ++a) r = r * hilb_class(dec.part(a));
    return r;
}

// Sum of stratum classes over every decomposition of n into r nested parts.
inline universal_motive oracle_coefficient(const nested_tuple& n, int r) {
    if (r < 1) throw parameter_error("oracle_coefficient: rank must be >= 1");
    universal_motive acc = universal_motive::zero();
    for (const auto& dec : enumerate_decompositions(n, r)) acc = acc + stratum_class(dec);
    return acc;
}

// The full series assembled coefficient by coefficient from the strata.
// Entries of a nested tuple are bounded by the last one, so enumerating up
// to the cap of the innermost variable and filtering suffices.
inline truncated_series<universal_motive> oracle_series(const quot_series_config& cfg) {
    auto s = truncated_series<universal_motive>::zero(cfg.cap);
    const int bound = cfg.cap[cfg.depth - 1];
    for (const auto& n : enumerate_nested(cfg.depth, bound)) {
        const exponent_vector e = n.to_exponents();
        if (!cfg.cap.contains(e)) continue;
        s = s + truncated_series<universal_motive>::monomial(oracle_coefficient(n, cfg.rank), e,
                                                             cfg.cap);
    }
    return s;
}

// Point count of the fixed-locus cells over a rational base: each sym class
// of size l contributes l + 1 and the L-weight contributes 1.
inline bigint euler_count(int r, const nested_tuple& n) {
    if (r < 1) throw parameter_error("euler_count: rank must be >= 1");
    bigint total;
    for (const auto& dec : enumerate_decompositions(n, r)) {
        bigint prod(1);
        for (int a = 0; a < dec.rank(); ++a) {
            const diff_tuple l = to_diffs(dec.part(a));
            for (int i = 0; i < l.depth(); ++i) prod *= bigint(l[i] + 1);
        }
        total += prod;
    }
    return total;
}

inline bigint euler_count(const quot_series_config& cfg, const nested_tuple& n) {
    if (n.depth() != cfg.depth)
        throw dimension_error("euler_count: tuple depth does not match config");
    return euler_count(cfg.rank, n);
}

} // namespace quotmot
