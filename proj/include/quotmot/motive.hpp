#pragma once

#include "quotmot/bigint.hpp"
#include "quotmot/errors.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quotmot {

// The free commutative polynomial ring Z[L, s1, s2, ...] on the Lefschetz
// class L and the symmetric-power classes s_n of a fixed smooth curve. No
// relations among the generators are imposed, so an identity holding here is
// an identity of literal polynomials. s_0 is the ring unit, not a generator.
class universal_motive {
public:
    // L^lefschetz * prod s_n^e over the (n, e) pairs in sym; pairs are sorted
    // by n with e > 0.
    struct monomial {
        int lefschetz = 0;
        std::vector<std::pair<int, int>> sym;

        int total_degree() const {
            int d = lefschetz;
            for (const auto& [n, e] : sym) d += e;
            return d;
        }

        monomial times(const monomial& o) const {
            monomial r;
            r.lefschetz = lefschetz + o.lefschetz;
            size_t i = 0, j = 0;
            while (i < sym.size() || j < o.sym.size()) {
                if (j == o.sym.size() || (i < sym.size() && sym[i].first < o.sym[j].first)) {
                    r.sym.push_back(sym[i++]);
                } else if (i == sym.size() || o.sym[j].first < sym[i].first) {
                    r.sym.push_back(o.sym[j++]);
                } else {
                    r.sym.emplace_back(sym[i].first, sym[i].second + o.sym[j].second);
                    ++i;
                    ++j;
                }
            }
            return r;
        }

        friend bool operator==(const monomial& a, const monomial& b) {
            return a.lefschetz == b.lefschetz && a.sym == b.sym;
        }

        std::string to_string() const {
            std::string s;
            auto append_factor = [&s](const std::string& base, int e) {
                if (!s.empty()) s += "*";
                s += base;
                if (e != 1) s += "^" + std::to_string(e);
            };
            if (lefschetz > 0) append_factor("L", lefschetz);
            for (const auto& [n, e] : sym) append_factor("s" + std::to_string(n), e);
            return s;
        }
    };

    // Graded-lex: total degree first, then L before s1 before s2 ... with the
    // larger exponent of the more significant generator coming first.
    struct term_order {
        bool operator()(const monomial& a, const monomial& b) const {
            const int da = a.total_degree();
            const int db = b.total_degree();
            if (da != db) return da < db;
            if (a.lefschetz != b.lefschetz) return a.lefschetz > b.lefschetz;
            size_t i = 0, j = 0;
            while (i < a.sym.size() && j < b.sym.size()) {
                if (a.sym[i].first != b.sym[j].first) return a.sym[i].first < b.sym[j].first;
                if (a.sym[i].second != b.sym[j].second) return a.sym[i].second > b.sym[j].second;
                ++i;
                ++j;
            }
            return i < a.sym.size();
        }
    };

    using term_map = std::map<monomial, bigint, term_order>;

    universal_motive() = default;
    universal_motive(long long c) { insert(monomial{}, bigint(c)); }
    explicit universal_motive(bigint c) { insert(monomial{}, std::move(c)); }

    static universal_motive zero() { return universal_motive(); }
    static universal_motive one() { return universal_motive(1); }

    // L^a; a = 0 gives the unit.
    static universal_motive lefschetz(int a = 1) {
        if (a < 0) throw parameter_error("lefschetz: exponent must be non-negative");
        universal_motive m;
        m.insert(monomial{a, {}}, bigint(1));
        return m;
    }

    // s_n = [Sym^n C]; s_0 is the unit.
    static universal_motive sym_class(int n) {
        if (n < 0) throw parameter_error("sym_class: index must be non-negative");
        if (n == 0) return one();
        universal_motive m;
        m.insert(monomial{0, {{n, 1}}}, bigint(1));
        return m;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == monomial{} &&
               terms_.begin()->second.is_one();
    }

    const term_map& terms() const { return terms_; }

    friend universal_motive operator+(const universal_motive& a, const universal_motive& b) {
        universal_motive r = a;
        for (const auto& [m, c] : b.terms_) r.insert(m, c);
        return r;
    }

    friend universal_motive operator-(const universal_motive& a, const universal_motive& b) {
        universal_motive r = a;
        for (const auto& [m, c] : b.terms_) r.insert(m, -c);
        return r;
    }

    universal_motive operator-() const {
        universal_motive r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend universal_motive operator*(const universal_motive& a, const universal_motive& b) {
        universal_motive r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.insert(ma.times(mb), ca * cb);
        return r;
    }

    friend bool operator==(const universal_motive& a, const universal_motive& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const universal_motive& a, const universal_motive& b) { return !(a == b); }

    // Units of a free polynomial ring over Z: the constants +1 and -1.
    std::optional<universal_motive> try_invert() const {
        if (terms_.size() == 1 && terms_.begin()->first == monomial{}) {
            if (auto inv = terms_.begin()->second.try_invert()) return universal_motive(*inv);
        }
        return std::nullopt;
    }

    // Highest power of L appearing in any term; -1 for the zero element.
    int lefschetz_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_)
            if (m.lefschetz > d) d = m.lefschetz;
        return d;
    }

    // The part with L-exponent exactly a, with L stripped off.
    universal_motive lefschetz_graded_part(int a) const {
        universal_motive r;
        for (const auto& [m, c] : terms_)
            if (m.lefschetz == a) r.insert(monomial{0, m.sym}, c);
        return r;
    }

    bool has_nonnegative_coefficients() const {
        for (const auto& [m, c] : terms_)
            if (c.is_negative()) return false;
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            const bool neg = c.is_negative();
            const bigint mag = c.abs();
            const std::string mono = m.to_string();
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

    void insert(const monomial& m, bigint c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

template <typename Stream>
Stream& operator<<(Stream& os, const universal_motive& m) {
    os << m.to_string();
    return os;
}

} // namespace quotmot
