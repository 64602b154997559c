#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

// Bad caller input: malformed parameters, violated preconditions.
// The CLI maps this to exit code 2.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A broken internal invariant (e.g. a duality gap after solving, or a
// non-affine level in an even-diameter scan). Never a recoverable state;
// the CLI maps this to exit code 1.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ricci
