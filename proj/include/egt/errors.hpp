#ifndef EGT_ERRORS_HPP
#define EGT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace egt {

// Malformed input text (graph6 records, edge lists). Messages carry the
// byte offset or line number of the first bad token.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violation on an operation's arguments.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Result would not fit the supported vertex range (n > 62).
class SizeError : public std::length_error {
public:
    explicit SizeError(const std::string& what) : std::length_error(what) {}
};

// An exact search exceeded its configured work budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative numeric method failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace egt

#endif // EGT_ERRORS_HPP
