#pragma once

#include "quotmot/bigint.hpp"
#include "quotmot/errors.hpp"
#include "quotmot/motive.hpp"
#include "quotmot/polynomials.hpp"
#include "quotmot/series.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quotmot {

enum class measure_kind { universal, hodge_deligne, signed_poincare, euler };

inline std::string measure_name(measure_kind k) {
    switch (k) {
    case measure_kind::universal: return "universal";
    case measure_kind::hodge_deligne: return "hodge_deligne";
    case measure_kind::signed_poincare: return "signed_poincare";
    case measure_kind::euler: return "euler";
    }
    throw parameter_error("measure_name: unknown kind");
}

inline std::optional<measure_kind> parse_measure(std::string_view s) {
    if (s == "universal") return measure_kind::universal;
    if (s == "hodge_deligne") return measure_kind::hodge_deligne;
    if (s == "signed_poincare") return measure_kind::signed_poincare;
    if (s == "euler") return measure_kind::euler;
    return std::nullopt;
}

// Which specialization to apply, and at which genus. Genus is irrelevant for
// the identity measure but still validated.
struct measure_spec {
    measure_kind kind = measure_kind::universal;
    int genus = 0;

    measure_spec() = default;
    measure_spec(measure_kind kind_, int genus_) : kind(kind_), genus(genus_) {
        if (genus < 0) throw parameter_error("measure_spec: genus must be >= 0");
    }
};

namespace detail {

// E-polynomials of Sym^0 C, ..., Sym^max_n C for a genus-g curve, read off
// one univariate expansion of (1-uq)^g (1-vq)^g / ((1-q)(1-uvq)).
inline std::vector<bivariate_poly> e_sym_power_table(int max_n, int genus) {
    if (max_n < 0) throw parameter_error("e_sym_power_table: bound must be >= 0");
    if (genus < 0) throw parameter_error("e_sym_power_table: genus must be >= 0");
    using S = truncated_series<bivariate_poly>;
    const cap_vector cap = cap_vector::uniform(1, max_n);
    const exponent_vector q1(std::vector<int>{1});
    const S one = S::one(cap);
    const S uq = S::monomial(bivariate_poly::monomial(bigint(1), 1, 0), q1, cap);
    const S vq = S::monomial(bivariate_poly::monomial(bigint(1), 0, 1), q1, cap);
    const S q = S::monomial(bivariate_poly::one(), q1, cap);
    const S uvq = S::monomial(bivariate_poly::monomial(bigint(1), 1, 1), q1, cap);
    const S expansion = pow(one - uq, genus) * pow(one - vq, genus) *
                        ((one - q) * (one - uvq)).inverse();
    std::vector<bivariate_poly> table;
    table.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n)
        table.push_back(expansion.coefficient(exponent_vector(std::vector<int>{n})));
    return table;
}

inline int max_sym_index(const universal_motive& m) {
    int max_n = 0;
    for (const auto& [mono, c] : m.terms())
        for (const auto& [n, e] : mono.sym) max_n = std::max(max_n, n);
    return max_n;
}

} // namespace detail

inline bivariate_poly e_sym_power(int n, int genus) {
    if (n < 0) throw parameter_error("e_sym_power: index must be >= 0");
    return detail::e_sym_power_table(n, genus).back();
}

// L goes to uv, s_n to the E-polynomial of Sym^n of a genus-g curve; extended
// as the unique ring homomorphism.
inline bivariate_poly apply_hodge_deligne(const universal_motive& m, int genus) {
    const auto table = detail::e_sym_power_table(detail::max_sym_index(m), genus);
    bivariate_poly acc;
    for (const auto& [mono, c] : m.terms()) {
        bivariate_poly term = bivariate_poly::monomial(c, mono.lefschetz, mono.lefschetz);
        for (const auto& [n, e] : mono.sym)
            for (int k = 0; k < e; ++k)
                term = term * table[static_cast<std::size_t>(n)];
        acc = acc + term;
    }
    return acc;
}

inline unipoly apply_signed_poincare(const universal_motive& m, int genus) {
    return collapse_uv_to_t(apply_hodge_deligne(m, genus));
}

inline bigint apply_euler(const universal_motive& m, int genus) {
    return evaluate_uv_at_one(apply_hodge_deligne(m, genus));
}

// Same value along the short route: L to 1 and s_n to the coefficient of q^n
// in (1-q)^{2g-2}. Exercised against apply_euler in tests.
inline bigint apply_euler_direct(const universal_motive& m, int genus) {
    if (genus < 0) throw parameter_error("apply_euler_direct: genus must be >= 0");
    const int max_n = detail::max_sym_index(m);
    using S = truncated_series<bigint>;
    const cap_vector cap = cap_vector::uniform(1, max_n);
    const exponent_vector q1(std::vector<int>{1});
    const S expansion = pow(S::one(cap) - S::monomial(bigint(1), q1, cap), 2 * genus - 2);
    std::vector<bigint> sym_value;
    sym_value.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n)
        sym_value.push_back(expansion.coefficient(exponent_vector(std::vector<int>{n})));
    bigint acc;
    for (const auto& [mono, c] : m.terms()) {
        bigint term = c;
        for (const auto& [n, e] : mono.sym)
            for (int k = 0; k < e; ++k) term *= sym_value[static_cast<std::size_t>(n)];
        acc += term;
    }
    return acc;
}

// Coefficientwise application of a ring map; cap and support carry over
// (except where a coefficient dies in the target).
template <coefficient_ring R, typename Fn>
auto map_coefficients(const truncated_series<R>& src, Fn&& fn)
    -> truncated_series<std::decay_t<decltype(fn(std::declval<const R&>()))>> {
    using S = std::decay_t<decltype(fn(std::declval<const R&>()))>;
    auto out = truncated_series<S>::zero(src.cap());
    for (const auto& [e, c] : src.terms())
        out = out + truncated_series<S>::monomial(fn(c), e, src.cap());
    return out;
}

inline truncated_series<bivariate_poly>
lift_hodge_deligne(const truncated_series<universal_motive>& s, int genus) {
    return map_coefficients(
        s, [genus](const universal_motive& m) { return apply_hodge_deligne(m, genus); });
}

inline truncated_series<unipoly>
lift_signed_poincare(const truncated_series<universal_motive>& s, int genus) {
    return map_coefficients(
        s, [genus](const universal_motive& m) { return apply_signed_poincare(m, genus); });
}

inline truncated_series<bigint> lift_euler(const truncated_series<universal_motive>& s,
                                           int genus) {
    return map_coefficients(s,
                            [genus](const universal_motive& m) { return apply_euler(m, genus); });
}

} // namespace quotmot
