#pragma once

#include <stdexcept>
#include <string>

namespace sparsecurves {

/// Input outside the admissible parameter domain (bad genus, alpha, word length...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Explicit enumeration would exceed the configured word cap; use analytic counting.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A certified comparison could not be decided at the maximal precision.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sparsecurves
