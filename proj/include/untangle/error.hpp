#ifndef UNTANGLE_ERROR_HPP
#define UNTANGLE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace untangle {

// Malformed or inconsistent input: parse failures, missing positions,
// violated preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input is well formed but outside what the constructions handle
// (non-outerplanar graph, non-collinear drawing, size caps).
class ScopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A post-condition that is checked exactly after a construction failed.
// Seeing one of these means a bug, not bad input.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace untangle

#endif // UNTANGLE_ERROR_HPP
