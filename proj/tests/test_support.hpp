#pragma once

#include "quotmot/quotmot.hpp"

#include <random>
#include <utility>
#include <vector>

namespace test_support {

using namespace quotmot;

using useries = truncated_series<universal_motive>;
using zseries = truncated_series<bigint>;

inline exponent_vector ev(std::vector<int> v) { return exponent_vector(std::move(v)); }
inline cap_vector cv(std::vector<int> v) { return cap_vector(std::move(v)); }

inline universal_motive L(int a = 1) { return universal_motive::lefschetz(a); }
inline universal_motive s(int n) { return universal_motive::sym_class(n); }

// Small random ring element: an integer combination of a few fixed monomials.
inline universal_motive random_motive(std::mt19937& rng) {
    static const std::vector<universal_motive> basis = {
        universal_motive::one(), L(), L(2), s(1), s(2), L() * s(1)};
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    universal_motive m = universal_motive::zero();
    std::uniform_int_distribution<int> nterms(0, 3);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) m = m + universal_motive(coeff(rng)) * basis[pick(rng)];
    return m;
}

inline useries random_series(std::mt19937& rng, const cap_vector& cap, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    useries r = useries::zero(cap);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<int> e(static_cast<std::size_t>(cap.dim()));
        for (int i = 0; i < cap.dim(); ++i) {
            std::uniform_int_distribution<int> exp(0, cap[i]);
            e[static_cast<std::size_t>(i)] = exp(rng);
        }
        r = r + useries::monomial(random_motive(rng), exponent_vector(std::move(e)), cap);
    }
    return r;
}

// Reference decomposition enumerator: generate every r-tuple of arbitrary
// exponent splittings and keep those whose parts are all non-decreasing.
// Deliberately dumb; the library enumerator is checked against it.
inline std::vector<std::vector<std::vector<int>>> brute_force_decompositions(
    const std::vector<int>& n, int r) {
    const int d = static_cast<int>(n.size());
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> parts(
        static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(d), 0));
    auto fill_column = [&](auto&& self, int col, int part, int rem) -> void {
        if (part == r - 1) {
            parts[static_cast<std::size_t>(part)][static_cast<std::size_t>(col)] = rem;
            if (col + 1 < d) {
                self(self, col + 1, 0, n[static_cast<std::size_t>(col + 1)]);
            } else {
                bool all_nested = true;
                for (const auto& p : parts)
                    for (int i = 1; i < d; ++i)
                        if (p[static_cast<std::size_t>(i - 1)] > p[static_cast<std::size_t>(i)])
                            all_nested = false;
                if (all_nested) out.push_back(parts);
            }
            return;
        }
        for (int x = 0; x <= rem; ++x) {
            parts[static_cast<std::size_t>(part)][static_cast<std::size_t>(col)] = x;
            self(self, col, part + 1, rem - x);
        }
    };
    fill_column(fill_column, 0, 0, n[0]);
    return out;
}

} // namespace test_support
