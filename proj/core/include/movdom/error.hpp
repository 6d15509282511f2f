#pragma once

#include <stdexcept>
#include <string>

namespace movdom {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (graph6, edge list, certificate documents).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Request exceeds a documented size bound (p > 64, naive p > 16, ...).
class LimitError : public Error {
public:
    using Error::Error;
};

/// Invalid argument to a constructor (out-of-range endpoint, loop edge, ...).
class GraphError : public Error {
public:
    using Error::Error;
};

/// An operation was called with its documented precondition violated.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Rejection sampling ran out of attempts.
class SamplingError : public Error {
public:
    using Error::Error;
};

} // namespace movdom
