#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hatg {

/// Inputs violate an operation's contract (dimension or color-count
/// mismatch, malformed structure, out-of-range value).
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact computation would exceed its configured budget. The offending
/// count is carried as a decimal string since it may not fit any machine
/// integer.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
    BudgetError(const std::string& what, std::string count_decimal)
        : std::runtime_error(what), count_(std::move(count_decimal)) {}

    const std::string& count_decimal() const noexcept { return count_; }

private:
    std::string count_;
};

/// A randomized construction exhausted its retry budget without producing a
/// verified object. The message includes the last violation found, so the
/// failure is a report rather than a silent downgrade.
class SearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A soundness condition that the construction arguments were supposed to
/// guarantee failed at runtime. Never expected on valid inputs; a thrown
/// ContractError is itself a reportable finding.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hatg
