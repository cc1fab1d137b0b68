#pragma once

#include <stdexcept>

namespace sqcol {

// Malformed input: bad file, out-of-range vertex, violated precondition.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A size or budget guard tripped before the computation could finish.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sqcol
