#pragma once

#include "quotmot/errors.hpp"
#include "quotmot/exponents.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace quotmot {

// Non-decreasing tuple (n_1 <= n_2 <= ... <= n_d) of non-negative lengths.
// Indexes the coefficient of q_1^{n_1} ... q_d^{n_d} in the nested series.
class nested_tuple {
public:
    explicit nested_tuple(std::vector<int> values) : v_(std::move(values)) {
        if (v_.empty()) throw dimension_error("nested_tuple: depth must be >= 1");
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (v_[i] < 0) throw parameter_error("nested_tuple: negative entry");
            if (i > 0 && v_[i - 1] > v_[i])
                throw parameter_error("nested_tuple: entries must be non-decreasing");
        }
    }

    static nested_tuple zeros(int depth) {
        if (depth < 1) throw dimension_error("nested_tuple: depth must be >= 1");
        return nested_tuple(std::vector<int>(static_cast<std::size_t>(depth), 0));
    }

    int depth() const { return static_cast<int>(v_.size()); }

    int operator[](int i) const { return v_.at(static_cast<std::size_t>(i)); }

    int last() const { return v_.back(); }

    const std::vector<int>& values() const { return v_; }

    exponent_vector to_exponents() const { return exponent_vector(v_); }

    friend bool operator==(const nested_tuple& a, const nested_tuple& b) { return a.v_ == b.v_; }
    friend bool operator!=(const nested_tuple& a, const nested_tuple& b) { return !(a == b); }

    std::string to_string() const { return to_exponents().to_string(); }

private:
    std::vector<int> v_;
};

// Successive differences (n_1, n_2 - n_1, ..., n_d - n_{d-1}); all entries
// non-negative, and the map to_diffs/from_diffs is a bijection.
class diff_tuple {
public:
    explicit diff_tuple(std::vector<int> values) : v_(std::move(values)) {
        if (v_.empty()) throw dimension_error("diff_tuple: depth must be >= 1");
        for (int x : v_)
            if (x < 0) throw parameter_error("diff_tuple: negative entry");
    }

    int depth() const { return static_cast<int>(v_.size()); }

    int operator[](int i) const { return v_.at(static_cast<std::size_t>(i)); }

    const std::vector<int>& values() const { return v_; }

    friend bool operator==(const diff_tuple& a, const diff_tuple& b) { return a.v_ == b.v_; }
    friend bool operator!=(const diff_tuple& a, const diff_tuple& b) { return !(a == b); }

private:
    std::vector<int> v_;
};

inline bool is_nested(const exponent_vector& e) {
    for (int i = 1; i < e.dim(); ++i)
        if (e[i - 1] > e[i]) return false;
    return true;
}

inline diff_tuple to_diffs(const nested_tuple& n) {
    std::vector<int> l(static_cast<std::size_t>(n.depth()));
    l[0] = n[0];
    for (int i = 1; i < n.depth(); ++i) l[static_cast<std::size_t>(i)] = n[i] - n[i - 1];
    return diff_tuple(std::move(l));
}

inline nested_tuple from_diffs(const diff_tuple& l) {
    std::vector<int> n(static_cast<std::size_t>(l.depth()));
    int acc = 0;
    for (int i = 0; i < l.depth(); ++i) {
        acc += l[i];
        n[static_cast<std::size_t>(i)] = acc;
    }
    return nested_tuple(std::move(n));
}

// All nested tuples of the given depth whose entries are bounded by `bound`,
// ordered by total sum and then lexicographically.
inline std::vector<nested_tuple> enumerate_nested(int depth, int bound) {
    if (depth < 1) throw dimension_error("enumerate_nested: depth must be >= 1");
    if (bound < 0) throw parameter_error("enumerate_nested: bound must be >= 0");
    std::vector<nested_tuple> out;
    std::vector<int> cur(static_cast<std::size_t>(depth));
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == depth) {
            out.push_back(nested_tuple(cur));
            return;
        }
        for (int x = lo; x <= bound; ++x) {
            cur[static_cast<std::size_t>(pos)] = x;
            self(self, pos + 1, x);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [](const nested_tuple& a, const nested_tuple& b) {
        int sa = 0, sb = 0;
        for (int x : a.values()) sa += x;
        for (int x : b.values()) sb += x;
        if (sa != sb) return sa < sb;
        return a.values() < b.values();
    });
    return out;
}

// An r-tuple of nested tuples summing componentwise to a fixed total.
class decomposition {
public:
    explicit decomposition(std::vector<nested_tuple> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw parameter_error("decomposition: needs at least one part");
        for (const auto& p : parts_)
            if (p.depth() != parts_.front().depth())
                throw dimension_error("decomposition: parts of unequal depth");
    }

    int rank() const { return static_cast<int>(parts_.size()); }
    int depth() const { return parts_.front().depth(); }
    const nested_tuple& part(int alpha) const { return parts_.at(static_cast<std::size_t>(alpha)); }
    const std::vector<nested_tuple>& parts() const { return parts_; }

    nested_tuple total() const {
        std::vector<int> t(static_cast<std::size_t>(depth()), 0);
        for (const auto& p : parts_)
            for (int i = 0; i < depth(); ++i) t[static_cast<std::size_t>(i)] += p[i];
        return nested_tuple(std::move(t));
    }

private:
    std::vector<nested_tuple> parts_;
};

namespace detail {

// Compositions of m into r non-negative ordered parts, lexicographic.
inline std::vector<std::vector<int>> compositions(int m, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == r - 1) {
            cur[static_cast<std::size_t>(pos)] = rem;
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= rem; ++x) {
            cur[static_cast<std::size_t>(pos)] = x;
            self(self, pos + 1, rem - x);
        }
    };
    rec(rec, 0, m);
    return out;
}

} // namespace detail

// Decompositions of n into r nested parts. Splitting is done per difference
// column: any choice of compositions of each l_i into r parts reassembles,
// via partial sums, into r valid nested tuples, and every decomposition
// arises exactly once this way.
inline std::vector<decomposition> enumerate_decompositions(const nested_tuple& n, int r) {
    if (r < 1) throw parameter_error("enumerate_decompositions: rank must be >= 1");
    const diff_tuple l = to_diffs(n);
    const int d = n.depth();

    std::vector<std::vector<std::vector<int>>> per_column;
    per_column.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) per_column.push_back(detail::compositions(l[i], r));

    std::vector<decomposition> out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
    for (;;) {
        std::vector<nested_tuple> parts;
        parts.reserve(static_cast<std::size_t>(r));
        for (int alpha = 0; alpha < r; ++alpha) {
            std::vector<int> diffs(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i)
                diffs[static_cast<std::size_t>(i)] =
                    per_column[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]
                              [static_cast<std::size_t>(alpha)];
            parts.push_back(from_diffs(diff_tuple(std::move(diffs))));
        }
        out.push_back(decomposition(std::move(parts)));

        int i = d - 1;
        while (i >= 0) {
            if (++pick[static_cast<std::size_t>(i)] < per_column[static_cast<std::size_t>(i)].size())
                break;
            pick[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

} // namespace quotmot
