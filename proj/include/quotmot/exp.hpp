#pragma once

#include "quotmot/bigint.hpp"
#include "quotmot/errors.hpp"
#include "quotmot/exponents.hpp"
#include "quotmot/motive.hpp"
#include "quotmot/polynomials.hpp"
#include "quotmot/series.hpp"

#include <limits>
#include <utility>
#include <vector>

namespace quotmot {

// The two class shapes the exponential is defined on: n -> L^{an} q^{n m}
// for a power of L, and n -> s_n L^{an} q^{n m} for the curve class times a
// power of L.
enum class exp_class_kind { lefschetz_power, curve_times_lefschetz };

struct exp_term {
    exp_class_kind class_kind;
    int a;    // L-exponent of the class
    int mult; // integer multiplicity, may be negative
    exponent_vector mono;

    exp_term(exp_class_kind class_kind_, int a_, int mult_, exponent_vector mono_)
        : class_kind(class_kind_), a(a_), mult(mult_), mono(std::move(mono_)) {
        if (a < 0) throw parameter_error("exp_term: L-exponent must be >= 0");
        if (mono.is_zero())
            throw augmentation_error("exp_term: monomial must have a positive entry");
    }
};

// A finite sum of terms, all in the same number of variables.
class exp_argument {
public:
    explicit exp_argument(int dim) : dim_(dim) {
        if (dim < 1) throw dimension_error("exp_argument: dimension must be >= 1");
    }

    int dim() const { return dim_; }
    const std::vector<exp_term>& terms() const { return terms_; }

    void add(exp_term t) {
        if (t.mono.dim() != dim_)
            throw dimension_error("exp_argument: term dimension does not match argument");
        terms_.push_back(std::move(t));
    }

private:
    int dim_;
    std::vector<exp_term> terms_;
};

// n-th symmetric power of a multiplicity-one term: a coefficient and the
// monomial it sits on.
struct sigma_term {
    universal_motive coeff;
    exponent_vector mono;
};

inline sigma_term sigma_n(const exp_term& t, int n) {
    if (t.mult != 1) throw parameter_error("sigma_n: term must have multiplicity 1");
    if (n < 0) throw parameter_error("sigma_n: index must be >= 0");
    universal_motive c = universal_motive::lefschetz(t.a * n);
    if (t.class_kind == exp_class_kind::curve_times_lefschetz)
        c = c * universal_motive::sym_class(n);
    return {std::move(c), t.mono.scaled(n)};
}

// Exp of the argument: the product over terms of (sum_n sigma_n)^mult.
// Each term's monomial is nonzero, so the inner sum leaves the cap box after
// finitely many n.
inline truncated_series<universal_motive> exp_plus(const exp_argument& arg,
                                                   const cap_vector& cap) {
    if (arg.dim() != cap.dim())
        throw dimension_error("exp_plus: cap dimension does not match argument");
    auto result = truncated_series<universal_motive>::one(cap);
    for (const exp_term& t : arg.terms()) {
        const exp_term unit(t.class_kind, t.a, 1, t.mono);
        auto factor = truncated_series<universal_motive>::zero(cap);
        for (int n = 0;; ++n) {
            sigma_term s = sigma_n(unit, n);
            if (n > 0 && !cap.contains(s.mono)) break;
            factor =
                factor + truncated_series<universal_motive>::monomial(s.coeff, s.mono, cap);
        }
        result = result * pow(factor, t.mult);
    }
    return result;
}

// [C x P^{r-1}] spread over the suffix monomials: the argument whose
// exponential is the full nested series.
inline exp_argument quot_exp_argument(int rank, int depth) {
    if (rank < 1) throw parameter_error("quot_exp_argument: rank must be >= 1");
    if (depth < 1) throw parameter_error("quot_exp_argument: depth must be >= 1");
    exp_argument arg(depth);
    for (int alpha = 1; alpha <= rank; ++alpha)
        for (int i = 1; i <= depth; ++i)
            arg.add(exp_term(exp_class_kind::curve_times_lefschetz, alpha - 1, 1,
                             suffix_exponent(depth, i)));
    return arg;
}

namespace detail {

inline int to_small_int(const bigint& x) {
    if (x > bigint(std::numeric_limits<int>::max()) ||
        x < bigint(std::numeric_limits<int>::min()))
        throw parameter_error("power_structure_pow: exponent does not fit in int");
    return x.value().convert_to<int>();
}

} // namespace detail

// (1-q)^{-f(u,v)} for f = sum p_ij u^i v^j: the product over (i,j) of
// (1-u^i v^j q)^{-p_ij}, expanded to order cap.
inline truncated_series<bivariate_poly> power_structure_pow(const bivariate_poly& f, int cap) {
    if (cap < 0) throw parameter_error("power_structure_pow: cap must be >= 0");
    using S = truncated_series<bivariate_poly>;
    const cap_vector cv = cap_vector::uniform(1, cap);
    const exponent_vector q1(std::vector<int>{1});
    S r = S::one(cv);
    for (const auto& [k, p] : f.terms()) {
        const S factor =
            S::one(cv) -
            S::monomial(bivariate_poly::monomial(bigint(1), k.first, k.second), q1, cv);
        r = r * pow(factor, -detail::to_small_int(p));
    }
    return r;
}

} // namespace quotmot
