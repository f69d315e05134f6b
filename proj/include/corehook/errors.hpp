#pragma once

#include <stdexcept>

namespace corehook {

/// Malformed or out-of-range arguments.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when gcd(s, t) > d: there are infinitely many d-distinct (s,t)-cores.
class InfiniteFamily : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameters outside both closed forms (reduced s < 2, or s = t).
class Degenerate : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A structural fact that must hold failed at runtime.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace corehook
