#pragma once

#include <stdexcept>
#include <string>

namespace kneser {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (bad vertex, size mismatch, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Input graph is larger than the cap of the requested operation.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, int value, int cap)
        : Error(what + ": " + std::to_string(value) + " exceeds cap " + std::to_string(cap)),
          value_(value), cap_(cap) {}

    int value() const noexcept { return value_; }
    int cap() const noexcept { return cap_; }

private:
    int value_;
    int cap_;
};

class NotATree : public InvalidInput {
public:
    NotATree() : InvalidInput("graph is not a tree") {}
    explicit NotATree(const std::string& what) : InvalidInput(what) {}
};

} // namespace kneser
