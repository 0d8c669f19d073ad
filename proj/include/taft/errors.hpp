#pragma once

#include <stdexcept>
#include <string>

namespace taft {

/// Two values from different scalar contexts were combined.
class ContextMismatchError : public std::invalid_argument {
public:
    explicit ContextMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Root order outside the supported range (n >= 2).
class InvalidOrderError : public std::invalid_argument {
public:
    explicit InvalidOrderError(const std::string& what)
        : std::invalid_argument(what) {}
};

class DivisionByZeroError : public std::domain_error {
public:
    explicit DivisionByZeroError(const std::string& what)
        : std::domain_error(what) {}
};

/// A product formula was requested outside the range where its
/// denominator is nonzero.
class DenominatorVanishesError : public std::domain_error {
public:
    explicit DenominatorVanishesError(const std::string& what)
        : std::domain_error(what) {}
};

/// Tensor factor signatures (arity or H/A tags) do not match.
class KindMismatchError : public std::invalid_argument {
public:
    explicit KindMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

}  // namespace taft
