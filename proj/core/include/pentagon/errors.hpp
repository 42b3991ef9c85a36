#pragma once

#include <stdexcept>

namespace pentagon {

// Base class for every error the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfRangeError : Error { using Error::Error; };
struct SelfLoopError : Error { using Error::Error; };
struct TooSmallError : Error { using Error::Error; };
struct KTooSmallError : Error { using Error::Error; };
struct TooManyHatsError : Error { using Error::Error; };
struct NotAnEdgeError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };

// graph6 decoding errors.
struct Graph6Error : Error { using Error::Error; };
struct BadCharError : Graph6Error { using Graph6Error::Graph6Error; };
struct TruncatedError : Graph6Error { using Graph6Error::Graph6Error; };
struct BadHeaderError : Graph6Error { using Graph6Error::Graph6Error; };

}  // namespace pentagon
