#pragma once

#include <stdexcept>

namespace piforge {

// Error taxonomy mirrored by the CLI exit codes: usage errors are handled by
// the argument parser (exit 1), DataError maps to exit 2, NumericError to 3.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace piforge
