#pragma once

#include <stdexcept>
#include <string>

namespace lp2 {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: malformed files, violated constructor preconditions, mismatched hearts.
class InputError : public Error {
public:
    using Error::Error;
};

class ShapeError : public InputError {
public:
    using InputError::InputError;
};

class HeartMismatch : public InputError {
public:
    HeartMismatch(int a, int b)
        : InputError("heart mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// A twist was requested for a module outside the target heart.
class MembershipError : public InputError {
public:
    using InputError::InputError;
};

// An internal invariant failed after construction (d*d != 0, twisted module
// violating relations, ...). Always a bug, never bad input.
class PostconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace lp2
