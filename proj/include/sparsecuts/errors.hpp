#pragma once

#include <stdexcept>
#include <string>

namespace sparsecuts {

/// Enumeration or vertex budget tripped; caller may retry with a sampled/approximate mode.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

struct UnboundedError : std::runtime_error {
    explicit UnboundedError(const std::string& what) : std::runtime_error(what) {}
};

struct TooManyRequested : std::runtime_error {
    explicit TooManyRequested(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeCoefficient : std::runtime_error {
    explicit NegativeCoefficient(const std::string& what) : std::runtime_error(what) {}
};

struct NotPowerOfTwo : std::runtime_error {
    explicit NotPowerOfTwo(const std::string& what) : std::runtime_error(what) {}
};

struct NormTooLarge : std::runtime_error {
    explicit NormTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateBox : std::runtime_error {
    explicit DegenerateBox(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sparsecuts
