#pragma once

#include <stdexcept>
#include <string>

namespace cycdes {

// Violated precondition or malformed input.  CLI maps this to exit code 2.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured limit was hit (enumeration cap, integer overflow).  Exit code 3.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Requested a cyclic descent extension on a connected ribbon, where none exists.
struct NotExtendable : DomainError {
    explicit NotExtendable(const std::string& what) : DomainError(what) {}
};

}  // namespace cycdes
