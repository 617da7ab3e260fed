#pragma once

#include "quotmot/errors.hpp"
#include "quotmot/exponents.hpp"

namespace quotmot {

// Parameters of one generating-series computation: r quotient steps, d
// nesting levels, and a truncation cap per formal variable.
struct quot_series_config {
    int rank;
    int depth;
    cap_vector cap;

    quot_series_config(int rank_, int depth_, cap_vector cap_)
        : rank(rank_), depth(depth_), cap(std::move(cap_)) {
        if (rank < 1) throw parameter_error("quot_series_config: rank must be >= 1");
        if (depth < 1) throw parameter_error("quot_series_config: depth must be >= 1");
        if (cap.dim() != depth)
            throw dimension_error("quot_series_config: cap dimension does not match depth");
    }

    static quot_series_config uniform(int rank, int depth, int cap) {
        return quot_series_config(rank, depth, cap_vector::uniform(depth, cap));
    }
};

} // namespace quotmot
