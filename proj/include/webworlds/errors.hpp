#pragma once

#include <stdexcept>
#include <string>

namespace webworlds {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed or contract-violating input (CLI exit code 2)
struct InvalidInput : Error {
    using Error::Error;
};

// an enumeration would exceed its size guard (CLI exit code 3)
struct GuardExceeded : Error {
    using Error::Error;
};

} // namespace webworlds
