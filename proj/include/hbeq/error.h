/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hbeq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A rule with neither head nor body atoms in program text.
class EmptyRuleError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A universe or workspace exceeds what the bitset machinery supports.
class LimitError : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NotPositiveError : public Error {
public:
    using Error::Error;
};

/// A synthesized counterexample failed post-hoc validation.
class InvalidWitnessError : public Error {
public:
    using Error::Error;
};

/// Two decision routes that must agree did not.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace hbeq
