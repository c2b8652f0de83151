#pragma once

#include <stdexcept>
#include <string>

namespace tbprim {

// Bad or inconsistent input (malformed file, width mismatch, non-permutation table).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a documented size bound (e.g. full subspace enumeration above n = 8).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tbprim
