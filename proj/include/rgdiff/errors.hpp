#pragma once

#include <stdexcept>
#include <string>

namespace rgdiff {

/// Raised when an iterated trajectory leaves the representable range.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when the implicit Van der Pol step has a vanishing leading coefficient.
class SingularStepError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a resonant forcing hits a base where neither particular-solution
/// formula has a usable denominator.
class DegenerateDenominatorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a first-order solution carries an n*lambda^n term on a base that
/// is not a characteristic root.
class UnexpectedSecularBaseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rgdiff
