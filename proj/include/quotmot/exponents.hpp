#pragma once

#include "quotmot/errors.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace quotmot {

// Multi-exponent of a monomial q_1^{e_1} ... q_d^{e_d}, d >= 1, entries >= 0.
class exponent_vector {
public:
    explicit exponent_vector(std::vector<int> e) : e_(std::move(e)) {
        if (e_.empty()) throw dimension_error("exponent_vector: ambient dimension must be positive");
        for (int x : e_)
            if (x < 0) throw parameter_error("exponent_vector: entries must be non-negative");
    }

    static exponent_vector zeros(int dim) {
        if (dim < 1) throw dimension_error("exponent_vector: ambient dimension must be positive");
        return exponent_vector(std::vector<int>(static_cast<size_t>(dim), 0));
    }

    int dim() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return e_; }

    bool is_zero() const {
        for (int x : e_)
            if (x != 0) return false;
        return true;
    }

    int total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

    exponent_vector scaled(int k) const {
        if (k < 0) throw parameter_error("exponent_vector: negative scale");
        std::vector<int> r(e_);
        for (int& x : r) x *= k;
        return exponent_vector(std::move(r));
    }

    friend exponent_vector operator+(const exponent_vector& a, const exponent_vector& b) {
        if (a.dim() != b.dim()) throw dimension_error("exponent_vector: dimension mismatch in sum");
        std::vector<int> r(a.e_);
        for (size_t i = 0; i < r.size(); ++i) r[i] += b.e_[i];
        return exponent_vector(std::move(r));
    }

    friend bool operator==(const exponent_vector& a, const exponent_vector& b) { return a.e_ == b.e_; }
    friend bool operator!=(const exponent_vector& a, const exponent_vector& b) { return a.e_ != b.e_; }

    // Strict order: total degree first, then lexicographic. Serves as the
    // canonical term order of every series in the library.
    struct graded_lex {
        bool operator()(const exponent_vector& a, const exponent_vector& b) const {
            const int da = a.total();
            const int db = b.total();
            if (da != db) return da < db;
            return a.e_ < b.e_;
        }
    };

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        s += ")";
        return s;
    }

private:
    std::vector<int> e_;
};

// Indicator of q_i q_{i+1} ... q_d inside a d-variable ring; i is 1-based.
inline exponent_vector suffix_exponent(int dim, int i) {
    if (dim < 1) throw dimension_error("suffix_exponent: ambient dimension must be positive");
    if (i < 1 || i > dim) throw parameter_error("suffix_exponent: index out of range");
    std::vector<int> e(static_cast<size_t>(dim), 0);
    for (int j = i - 1; j < dim; ++j) e[static_cast<size_t>(j)] = 1;
    return exponent_vector(std::move(e));
}

// Per-variable truncation bounds: a monomial is retained iff e_i <= cap_i for
// every i.
class cap_vector {
public:
    explicit cap_vector(std::vector<int> c) : c_(std::move(c)) {
        if (c_.empty()) throw dimension_error("cap_vector: ambient dimension must be positive");
        for (int x : c_)
            if (x < 0) throw parameter_error("cap_vector: entries must be non-negative");
    }

    static cap_vector uniform(int dim, int cap) {
        if (dim < 1) throw dimension_error("cap_vector: ambient dimension must be positive");
        if (cap < 0) throw parameter_error("cap_vector: cap must be non-negative");
        return cap_vector(std::vector<int>(static_cast<size_t>(dim), cap));
    }

    int dim() const { return static_cast<int>(c_.size()); }
    int operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return c_; }

    bool contains(const exponent_vector& e) const {
        if (e.dim() != dim()) throw dimension_error("cap_vector: dimension mismatch");
        for (int i = 0; i < dim(); ++i)
            if (e[i] > c_[static_cast<size_t>(i)]) return false;
        return true;
    }

    // True when other_i <= this_i for all i (re-truncation to `other` is legal).
    bool dominates(const cap_vector& other) const {
        if (other.dim() != dim()) throw dimension_error("cap_vector: dimension mismatch");
        for (int i = 0; i < dim(); ++i)
            if (other[i] > c_[static_cast<size_t>(i)]) return false;
        return true;
    }

    friend bool operator==(const cap_vector& a, const cap_vector& b) { return a.c_ == b.c_; }
    friend bool operator!=(const cap_vector& a, const cap_vector& b) { return a.c_ != b.c_; }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        s += ")";
        return s;
    }

private:
    std::vector<int> c_;
};

} // namespace quotmot
