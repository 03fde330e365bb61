#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdbc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument value (nonpositive modulus, m = 0, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside the domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configuration the method does not support (EDM with m != 2, delta > 1/2, ...).
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Numerical breakdown: singular matrix, residual bound violated.
class NumericalError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public NumericalError {
public:
    explicit SingularMatrixError(std::size_t row)
        : NumericalError("singular matrix: zero pivot at row " + std::to_string(row)), row_(row) {}

    SingularMatrixError(std::size_t row, const std::string& message) : NumericalError(message), row_(row) {}

    [[nodiscard]] std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace pdbc
