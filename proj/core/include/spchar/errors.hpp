#pragma once

#include <stdexcept>

namespace spchar {

// Base class of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter outside an operation's domain (genus < 1, d < 1, ...).
class invalid_argument_error : public error {
public:
    using error::error;
};

// Operands living in different rings (genus mismatch).
class incompatible_operands_error : public error {
public:
    using error::error;
};

// A series whose constant term violates an operation's requirement.
class invalid_series_error : public error {
public:
    using error::error;
};

// A matrix failing the symplectic condition M^T J M = J.
class invalid_matrix_error : public error {
public:
    using error::error;
};

// A mathematically guaranteed property did not hold; signals a bug upstream.
class internal_consistency_error : public error {
public:
    using error::error;
};

// A brute-force request exceeding the configured budget.
class resource_limit_error : public error {
public:
    using error::error;
};

} // namespace spchar
