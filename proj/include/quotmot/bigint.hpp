#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <utility>

namespace quotmot {

// Exact integers of unbounded magnitude, exposing the coefficient-ring
// interface shared by all rings in this library (zero/one, unit detection,
// canonical text form).
class bigint {
public:
    using rep = boost::multiprecision::cpp_int;

    bigint() = default;
    bigint(long long v) : v_(v) {}
    explicit bigint(rep v) : v_(std::move(v)) {}

    static bigint zero() { return bigint(); }
    static bigint one() { return bigint(1); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }

    // Units of the integers: +1 and -1, each its own inverse.
    std::optional<bigint> try_invert() const {
        if (v_ == 1 || v_ == -1) return *this;
        return std::nullopt;
    }

    bigint abs() const { return bigint(rep(boost::multiprecision::abs(v_))); }

    const rep& value() const { return v_; }

    std::string to_string() const { return v_.str(); }

    friend bigint operator+(const bigint& a, const bigint& b) { return bigint(rep(a.v_ + b.v_)); }
    friend bigint operator-(const bigint& a, const bigint& b) { return bigint(rep(a.v_ - b.v_)); }
    friend bigint operator*(const bigint& a, const bigint& b) { return bigint(rep(a.v_ * b.v_)); }
    bigint operator-() const { return bigint(rep(-v_)); }

    bigint& operator+=(const bigint& o) { v_ += o.v_; return *this; }
    bigint& operator-=(const bigint& o) { v_ -= o.v_; return *this; }
    bigint& operator*=(const bigint& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const bigint& a, const bigint& b) { return a.v_ == b.v_; }
    friend bool operator!=(const bigint& a, const bigint& b) { return a.v_ != b.v_; }
    friend bool operator<(const bigint& a, const bigint& b) { return a.v_ < b.v_; }
    friend bool operator<=(const bigint& a, const bigint& b) { return a.v_ <= b.v_; }
    friend bool operator>(const bigint& a, const bigint& b) { return a.v_ > b.v_; }
    friend bool operator>=(const bigint& a, const bigint& b) { return a.v_ >= b.v_; }

private:
    rep v_;
};

template <typename Stream>
Stream& operator<<(Stream& os, const bigint& x) {
    os << x.to_string();
    return os;
}

} // namespace quotmot
