#pragma once

#include <stdexcept>
#include <string>

namespace pebble {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite cost or binomial sum left the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Input outside the accepted domain (n < 1, gamma outside [0,1], ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class UnsolvableError : public Error {
public:
    using Error::Error;
};

// Cell budget, materialization cap, or table coverage exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

class InstanceTooLargeError : public ResourceError {
public:
    using ResourceError::ResourceError;
};

// A move sequence that does not replay consistently.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace pebble
