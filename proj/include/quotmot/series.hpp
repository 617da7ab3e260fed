#pragma once

#include "quotmot/errors.hpp"
#include "quotmot/exponents.hpp"

#include <algorithm>
#include <concepts>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace quotmot {

// An exact commutative coefficient ring: value-semantic, with decidable
// equality, distinguished 0 and 1, unit detection, and a canonical text form.
// A default-constructed value is the ring zero.
template <typename R>
concept coefficient_ring =
    std::regular<R> && requires(const R& a, const R& b) {
        { R::zero() } -> std::same_as<R>;
        { R::one() } -> std::same_as<R>;
        { a + b } -> std::same_as<R>;
        { a * b } -> std::same_as<R>;
        { a - b } -> std::same_as<R>;
        { -a } -> std::same_as<R>;
        { a.is_zero() } -> std::same_as<bool>;
        { a.is_one() } -> std::same_as<bool>;
        { a.try_invert() } -> std::same_as<std::optional<R>>;
        { a.to_string() } -> std::same_as<std::string>;
    };

// Truncated formal power series in d variables over R. Terms are kept in a
// sparse map in graded-lex order; the class maintains the canonical form
// invariant: no zero coefficient and no out-of-cap exponent is ever stored.
// Values are immutable after construction apart from whole-value assignment,
// so they are safe to share across threads.
template <coefficient_ring R>
class truncated_series {
public:
    using term_map = std::map<exponent_vector, R, exponent_vector::graded_lex>;

    explicit truncated_series(cap_vector cap) : cap_(std::move(cap)) {}

    static truncated_series zero(const cap_vector& cap) { return truncated_series(cap); }

    static truncated_series one(const cap_vector& cap) {
        return monomial(R::one(), exponent_vector::zeros(cap.dim()), cap);
    }

    // Single term coeff * q^e. An exponent beyond the cap yields the zero
    // series: the image of the monomial in the quotient by the cap ideal.
    static truncated_series monomial(R coeff, const exponent_vector& e, const cap_vector& cap) {
        if (e.dim() != cap.dim()) throw dimension_error("monomial: exponent/cap dimension mismatch");
        truncated_series s(cap);
        if (!coeff.is_zero() && cap.contains(e)) s.terms_.emplace(e, std::move(coeff));
        return s;
    }

    int dim() const { return cap_.dim(); }
    const cap_vector& cap() const { return cap_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_zero() && terms_.begin()->second.is_one();
    }

    // Stored coefficient or ring zero; beyond the cap the value is unknown,
    // not zero, hence the dedicated error.
    R coefficient(const exponent_vector& e) const {
        if (e.dim() != dim()) throw dimension_error("coefficient: dimension mismatch");
        if (!cap_.contains(e)) throw out_of_cap_error("coefficient: exponent " + e.to_string() +
                                                      " beyond cap " + cap_.to_string());
        auto it = terms_.find(e);
        return it == terms_.end() ? R::zero() : it->second;
    }

    R constant_term() const { return coefficient(exponent_vector::zeros(dim())); }

    friend truncated_series operator+(const truncated_series& a, const truncated_series& b) {
        a.require_same_shape(b, "add");
        truncated_series r(a.cap_);
        r.terms_ = a.terms_;
        for (const auto& [e, c] : b.terms_) r.accumulate(e, c);
        return r;
    }

    friend truncated_series operator-(const truncated_series& a, const truncated_series& b) {
        a.require_same_shape(b, "sub");
        truncated_series r(a.cap_);
        r.terms_ = a.terms_;
        for (const auto& [e, c] : b.terms_) r.accumulate(e, -c);
        return r;
    }

    truncated_series operator-() const {
        truncated_series r(cap_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    // Cauchy product; exponents escaping the cap in any coordinate are
    // discarded, which is exact as an ideal quotient.
    friend truncated_series operator*(const truncated_series& a, const truncated_series& b) {
        a.require_same_shape(b, "mul");
        truncated_series r(a.cap_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                exponent_vector e = ea + eb;
                if (r.cap_.contains(e)) r.accumulate(e, ca * cb);
            }
        }
        return r;
    }

    // Multiplicative inverse up to the cap, by graded recursion: with
    // b_0 = a_0^{-1}, each b_e = -a_0^{-1} * sum over nonzero f <= e of
    // a_f * b_{e-f}. Requires a unit constant term.
    truncated_series inverse() const {
        const exponent_vector origin = exponent_vector::zeros(dim());
        auto it0 = terms_.find(origin);
        if (it0 == terms_.end()) throw invert_error("inverse: constant term is zero");
        std::optional<R> inv0 = it0->second.try_invert();
        if (!inv0) throw invert_error("inverse: constant term is not a unit");

        truncated_series b(cap_);
        b.terms_.emplace(origin, *inv0);
        for_each_exponent_in_cap(cap_, [&](const exponent_vector& e) {
            if (e.is_zero()) return;
            R acc = R::zero();
            for (const auto& [f, af] : terms_) {
                if (f.is_zero()) continue;
                std::optional<exponent_vector> g = component_difference(e, f);
                if (!g) continue;
                auto bg = b.terms_.find(*g);
                if (bg != b.terms_.end()) acc = acc + af * bg->second;
            }
            R be = -(*inv0 * acc);
            if (!be.is_zero()) b.terms_.emplace(e, std::move(be));
        });
        return b;
    }

    // Image under the quotient onto a smaller cap. Every ring operation
    // commutes with this map.
    truncated_series truncate_to(const cap_vector& smaller) const {
        if (!cap_.dominates(smaller))
            throw dimension_error("truncate_to: target cap must be componentwise <= current cap");
        truncated_series r(smaller);
        for (const auto& [e, c] : terms_)
            if (smaller.contains(e)) r.terms_.emplace(e, c);
        return r;
    }

    friend bool operator==(const truncated_series& a, const truncated_series& b) {
        return a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const truncated_series& a, const truncated_series& b) { return !(a == b); }

    // Canonical-form invariant, intended for test assertions.
    bool is_canonical() const {
        for (const auto& [e, c] : terms_) {
            if (c.is_zero()) return false;
            if (e.dim() != dim()) return false;
            if (!cap_.contains(e)) return false;
        }
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")";
            if (!e.is_zero()) s += "*q^" + e.to_string();
        }
        return s;
    }

private:
    cap_vector cap_;
    term_map terms_;

    void require_same_shape(const truncated_series& o, const char* op) const {
        if (cap_ != o.cap_)
            throw dimension_error(std::string(op) + ": operands have different caps (" +
                                  cap_.to_string() + " vs " + o.cap_.to_string() + ")");
    }

    void accumulate(const exponent_vector& e, R c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, std::move(c));
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static std::optional<exponent_vector> component_difference(const exponent_vector& a,
                                                               const exponent_vector& b) {
        std::vector<int> r(static_cast<size_t>(a.dim()));
        for (int i = 0; i < a.dim(); ++i) {
            const int x = a[i] - b[i];
            if (x < 0) return std::nullopt;
            r[static_cast<size_t>(i)] = x;
        }
        return exponent_vector(std::move(r));
    }

    template <typename Fn>
    static void for_each_exponent_in_cap(const cap_vector& cap, Fn&& fn) {
        // Graded-lex sweep of the whole cap box; sorting keeps the graded
        // recursion of inverse() well-founded.
        std::vector<exponent_vector> box;
        std::vector<int> cur(static_cast<size_t>(cap.dim()), 0);
        while (true) {
            box.push_back(exponent_vector(cur));
            int i = cap.dim() - 1;
            while (i >= 0 && cur[static_cast<size_t>(i)] == cap[i]) {
                cur[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++cur[static_cast<size_t>(i)];
        }
        std::sort(box.begin(), box.end(), [](const exponent_vector& x, const exponent_vector& y) {
            return exponent_vector::graded_lex{}(x, y);
        });
        for (const exponent_vector& e : box) fn(e);
    }
};

// term c * q^k of a univariate source becomes c * scale^k * q^{k * target},
// truncated by cap. The target must be a nonzero vector so that the
// substitution preserves the augmentation ideal.
template <coefficient_ring R>
truncated_series<R> substitute(const truncated_series<R>& src, const R& coeff_scale,
                               const exponent_vector& target, const cap_vector& cap) {
    if (src.dim() != 1) throw dimension_error("substitute: source series must be univariate");
    if (target.dim() != cap.dim()) throw dimension_error("substitute: target/cap dimension mismatch");
    if (target.is_zero()) throw substitution_error("substitute: target exponent must be nonzero");

    truncated_series<R> r = truncated_series<R>::zero(cap);
    // Source terms are visited in increasing degree, so scale^k can be grown
    // incrementally and the sweep can stop once k*target escapes the cap.
    int k = 0;
    R scale_pow = R::one();
    for (const auto& [e, c] : src.terms()) {
        const int deg = e[0];
        while (k < deg) {
            scale_pow = scale_pow * coeff_scale;
            ++k;
        }
        exponent_vector image = target.scaled(deg);
        if (!cap.contains(image)) break;
        r = r + truncated_series<R>::monomial(c * scale_pow, image, cap);
    }
    return r;
}

template <coefficient_ring R>
truncated_series<R> product_of(const cap_vector& cap, std::span<const truncated_series<R>> factors) {
    truncated_series<R> r = truncated_series<R>::one(cap);
    for (const truncated_series<R>& f : factors) r = r * f;
    return r;
}

template <coefficient_ring R>
truncated_series<R> product_of(const cap_vector& cap, const std::vector<truncated_series<R>>& factors) {
    return product_of(cap, std::span<const truncated_series<R>>(factors.data(), factors.size()));
}

// Integer power; negative exponents go through inverse().
template <coefficient_ring R>
truncated_series<R> pow(const truncated_series<R>& base, int exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    truncated_series<R> r = truncated_series<R>::one(base.cap());
    for (int k = 0; k < exponent; ++k) r = r * base;
    return r;
}

} // namespace quotmot
