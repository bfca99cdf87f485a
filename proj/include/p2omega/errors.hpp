#pragma once

#include <stdexcept>
#include <string>

namespace p2omega {

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingGV : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPolynomialContribution : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NegativeCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegerGV : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegreeBoundViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedGcd : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingRefinedData : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace p2omega
