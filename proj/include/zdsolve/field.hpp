#pragma once

#include <concepts>
#include <string>

namespace zdsolve {

// Coefficient fields must be exact: canonical representatives, decidable
// equality, and total arithmetic except division by zero.
template <class F>
concept CoefficientField = requires(const F a, const F b) {
    { F::zero() } -> std::convertible_to<F>;
    { F::one() } -> std::convertible_to<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

}  // namespace zdsolve
