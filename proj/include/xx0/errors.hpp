#pragma once

#include <stdexcept>
#include <string>

namespace xx0 {

/// Invalid input: precondition violated, parameter outside the supported range.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative scheme hit its cap without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix or weight turned out singular where the algorithm needs it regular.
class SingularError : public std::runtime_error {
public:
    explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace xx0
