#pragma once

#include "quotmot/bigint.hpp"
#include "quotmot/errors.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace quotmot {

// Z[u,v], the target of the Hodge-Deligne specialization.
class bivariate_poly {
public:
    using key = std::pair<int, int>; // (u-exponent, v-exponent)

    // Graded-lex with u before v: total degree first, then higher u-exponent
    // first.
    struct term_order {
        bool operator()(const key& a, const key& b) const {
            const int da = a.first + a.second;
            const int db = b.first + b.second;
            if (da != db) return da < db;
            return a.first > b.first;
        }
    };

    using term_map = std::map<key, bigint, term_order>;

    bivariate_poly() = default;
    bivariate_poly(long long c) { insert({0, 0}, bigint(c)); }
    explicit bivariate_poly(bigint c) { insert({0, 0}, std::move(c)); }

    static bivariate_poly zero() { return bivariate_poly(); }
    static bivariate_poly one() { return bivariate_poly(1); }

    static bivariate_poly monomial(bigint c, int u_exp, int v_exp) {
        if (u_exp < 0 || v_exp < 0) throw parameter_error("bivariate_poly: negative exponent");
        bivariate_poly p;
        p.insert({u_exp, v_exp}, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == key{0, 0} &&
               terms_.begin()->second.is_one();
    }

    const term_map& terms() const { return terms_; }

    bigint coefficient(int u_exp, int v_exp) const {
        auto it = terms_.find({u_exp, v_exp});
        return it == terms_.end() ? bigint() : it->second;
    }

    friend bivariate_poly operator+(const bivariate_poly& a, const bivariate_poly& b) {
        bivariate_poly r = a;
        for (const auto& [k, c] : b.terms_) r.insert(k, c);
        return r;
    }

    friend bivariate_poly operator-(const bivariate_poly& a, const bivariate_poly& b) {
        bivariate_poly r = a;
        for (const auto& [k, c] : b.terms_) r.insert(k, -c);
        return r;
    }

    bivariate_poly operator-() const {
        bivariate_poly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend bivariate_poly operator*(const bivariate_poly& a, const bivariate_poly& b) {
        bivariate_poly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.insert({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }

    friend bool operator==(const bivariate_poly& a, const bivariate_poly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const bivariate_poly& a, const bivariate_poly& b) { return !(a == b); }

    std::optional<bivariate_poly> try_invert() const {
        if (terms_.size() == 1 && terms_.begin()->first == key{0, 0}) {
            if (auto inv = terms_.begin()->second.try_invert()) return bivariate_poly(*inv);
        }
        return std::nullopt;
    }

    // Max of i+j over stored terms; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_)
            if (k.first + k.second > d) d = k.first + k.second;
        return d;
    }

    bivariate_poly swapped_uv() const {
        bivariate_poly r;
        for (const auto& [k, c] : terms_) r.insert({k.second, k.first}, c);
        return r;
    }

    bool is_symmetric() const { return *this == swapped_uv(); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            const bool neg = c.is_negative();
            const bigint mag = c.abs();
            std::string mono;
            auto append_factor = [&mono](const char* base, int e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += base;
                if (e != 1) mono += "^" + std::to_string(e);
            };
            append_factor("u", k.first);
            append_factor("v", k.second);
            std::string piece;
            if (mono.empty()) {
                piece = mag.to_string();
            } else if (mag.is_one()) {
                piece = mono;
            } else {
                piece = mag.to_string() + "*" + mono;
            }
            if (s.empty()) {
                s = neg ? "-" + piece : piece;
            } else {
                s += neg ? " - " : " + ";
                s += piece;
            }
        }
        return s;
    }

private:
    term_map terms_;

    void insert(const key& k, bigint c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

// Z[t], the target of the signed Poincare specialization.
class unipoly {
public:
    using term_map = std::map<int, bigint>;

    unipoly() = default;
    unipoly(long long c) { insert(0, bigint(c)); }
    explicit unipoly(bigint c) { insert(0, std::move(c)); }

    static unipoly zero() { return unipoly(); }
    static unipoly one() { return unipoly(1); }

    static unipoly monomial(bigint c, int e) {
        if (e < 0) throw parameter_error("unipoly: negative exponent");
        unipoly p;
        p.insert(e, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
    }

    const term_map& terms() const { return terms_; }

    bigint coefficient(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? bigint() : it->second;
    }

    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    friend unipoly operator+(const unipoly& a, const unipoly& b) {
        unipoly r = a;
        for (const auto& [e, c] : b.terms_) r.insert(e, c);
        return r;
    }

    friend unipoly operator-(const unipoly& a, const unipoly& b) {
        unipoly r = a;
        for (const auto& [e, c] : b.terms_) r.insert(e, -c);
        return r;
    }

    unipoly operator-() const {
        unipoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend unipoly operator*(const unipoly& a, const unipoly& b) {
        unipoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.insert(ea + eb, ca * cb);
        return r;
    }

    friend bool operator==(const unipoly& a, const unipoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const unipoly& a, const unipoly& b) { return !(a == b); }

    std::optional<unipoly> try_invert() const {
        if (terms_.size() == 1 && terms_.begin()->first == 0) {
            if (auto inv = terms_.begin()->second.try_invert()) return unipoly(*inv);
        }
        return std::nullopt;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            const bool neg = c.is_negative();
            const bigint mag = c.abs();
            std::string piece;
            if (e == 0) {
                piece = mag.to_string();
            } else {
                std::string mono = e == 1 ? "t" : "t^" + std::to_string(e);
                piece = mag.is_one() ? mono : mag.to_string() + "*" + mono;
            }
            if (s.empty()) {
                s = neg ? "-" + piece : piece;
            } else {
                s += neg ? " - " : " + ";
                s += piece;
            }
        }
        return s;
    }

private:
    term_map terms_;

    void insert(int e, bigint c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

// u = v = t.
inline unipoly collapse_uv_to_t(const bivariate_poly& p) {
    unipoly r;
    for (const auto& [k, c] : p.terms())
        r = r + unipoly::monomial(c, k.first + k.second);
    return r;
}

// u = v = 1.
inline bigint evaluate_uv_at_one(const bivariate_poly& p) {
    bigint r;
    for (const auto& [k, c] : p.terms()) r += c;
    return r;
}

template <typename Stream>
Stream& operator<<(Stream& os, const bivariate_poly& p) {
    os << p.to_string();
    return os;
}

template <typename Stream>
Stream& operator<<(Stream& os, const unipoly& p) {
    os << p.to_string();
    return os;
}

} // namespace quotmot
