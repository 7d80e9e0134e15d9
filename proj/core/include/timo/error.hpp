#ifndef TIMO_ERROR_HPP
#define TIMO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace timo {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user-supplied configuration (parameters, grid, initial data, presets).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Array lengths that do not agree with the grid they are used on.
class LengthMismatchError : public Error {
public:
    using Error::Error;
};

/// A zero (or numerically zero) pivot met during an elimination.
class SingularSolveError : public Error {
public:
    SingularSolveError(const std::string& what, std::size_t pivot_index)
        : Error(what), pivot_index_(pivot_index) {}

    [[nodiscard]] std::size_t pivot_index() const noexcept { return pivot_index_; }

private:
    std::size_t pivot_index_;
};

/// The time integration produced non-finite or explosively large values.
class BlowUpError : public Error {
public:
    BlowUpError(const std::string& what, long step, std::string field)
        : Error(what), step_(step), field_(std::move(field)) {}

    [[nodiscard]] long step() const noexcept { return step_; }
    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    long step_;
    std::string field_;
};

/// A convergence-order estimate whose error values vanish, so no order is defined.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// A decay fit whose input does not satisfy the fit's preconditions.
class FitError : public Error {
public:
    using Error::Error;
};

}  // namespace timo

#endif  // TIMO_ERROR_HPP
