#pragma once

#include <stdexcept>
#include <string>

namespace hyperlat {

/// Input violates a mathematical precondition (degenerate pair, zero element,
/// negative orientation, ...). Maps to exit code 1 in the CLI.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact integer arithmetic left the int64 range.
class OverflowError : public DomainError {
public:
    explicit OverflowError(const std::string& what) : DomainError(what) {}
};

/// An enumeration would exceed its configured cell budget.
class BudgetError : public DomainError {
public:
    explicit BudgetError(const std::string& what) : DomainError(what) {}
};

/// Malformed textual input (lattice point strings, map files, tables).
/// Maps to exit code 2 in the CLI.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hyperlat
