#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sec {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad ids, self-loops, parse failures.
class InputError : public Error {
public:
    using Error::Error;
};

/// Text that failed to parse; line and column are 1-based.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A theorem hypothesis does not hold for the given input.
class HypothesisError : public Error {
public:
    HypothesisError(std::string hypothesis, const std::string& detail);

    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

/// Search limits of the exact oracle were exceeded. Never a wrong answer.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Something the proofs guarantee did not happen. Either the implementation
/// is wrong or the input violated a hypothesis that could not be checked.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

/// An extension step found no admissible color.
class ExtensionError : public TheoremViolation {
public:
    ExtensionError(std::size_t step, std::uint32_t edge, std::uint32_t promised_bound,
                   std::uint32_t actual_conflicts, std::size_t list_size);

    std::size_t step() const noexcept { return step_; }
    std::uint32_t edge() const noexcept { return edge_; }
    std::uint32_t promised_bound() const noexcept { return promised_bound_; }
    std::uint32_t actual_conflicts() const noexcept { return actual_conflicts_; }
    std::size_t list_size() const noexcept { return list_size_; }

private:
    std::size_t step_;
    std::uint32_t edge_;
    std::uint32_t promised_bound_;
    std::uint32_t actual_conflicts_;
    std::size_t list_size_;
};

} // namespace sec
