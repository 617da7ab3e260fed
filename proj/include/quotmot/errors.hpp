#pragma once

#include <stdexcept>
#include <string>

namespace quotmot {

// Every failure raised by the library derives from quotmot::error.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched variable counts or truncation caps, or a zero-dimensional ambient.
class dimension_error : public error {
public:
    explicit dimension_error(const std::string& what) : error(what) {}
};

// A coefficient was requested beyond the truncation cap (unknown, not zero).
class out_of_cap_error : public error {
public:
    explicit out_of_cap_error(const std::string& what) : error(what) {}
};

// Series inversion attempted with a non-unit constant term.
class invert_error : public error {
public:
    explicit invert_error(const std::string& what) : error(what) {}
};

// Substitution target is the zero monomial (constant substitution into a series).
class substitution_error : public error {
public:
    explicit substitution_error(const std::string& what) : error(what) {}
};

// Exponential argument outside the augmentation ideal (a term with zero monomial).
class augmentation_error : public error {
public:
    explicit augmentation_error(const std::string& what) : error(what) {}
};

// Out-of-range rank, depth, index, genus or malformed tuple data.
class parameter_error : public error {
public:
    explicit parameter_error(const std::string& what) : error(what) {}
};

} // namespace quotmot
