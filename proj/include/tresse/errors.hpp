#ifndef TRESSE_ERRORS_HPP
#define TRESSE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tresse {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax error in an expression, frame or box string; offset is 0-based.
class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t offset)
      : error(msg + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// Evaluation at a zero of the denominator.
class pole_error : public error {
public:
    using error::error;
};

// A denominator that is identically zero (construction or substitution).
class zero_denominator_error : public error {
public:
    using error::error;
};

// det == 0 as a function, as opposed to vanishing at isolated points.
class singular_matrix_error : public error {
public:
    using error::error;
};

// Shape mismatch: wrong dimension, degree, or variable set.
class dimension_error : public error {
public:
    using error::error;
};

// An invariant that is undefined on the given input (vanishing denominator
// of a catalog ratio, degenerate frame ingredient, ...).
class degenerate_error : public error {
public:
    using error::error;
};

// Malformed input data (JSON schema violations and the like).
class data_error : public error {
public:
    using error::error;
};

} // namespace tresse

#endif
