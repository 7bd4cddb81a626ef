#pragma once

#include <stdexcept>
#include <string>

namespace waveatom {

// Bad run configuration or malformed input file. CLI exit code 1.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's stated domain. CLI exit code 2.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Compton inputs with no physical solution (vanishing or negative
// numerator/denominator of the scattered-frequency closed form).
class kinematics_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sampled packet whose spectrum is not resolved by the grid; widths
// would be meaningless.
class resolution_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Goodness-of-fit requested against an empty histogram or a degenerate
// reference curve.
class fit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace waveatom
