#pragma once

#include <stdexcept>
#include <string>

namespace gac {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An encoding failed the owning action's group or set membership test.
class MembershipError : public Error {
public:
    using Error::Error;
};

// An explicit finite tape ran out of bits mid-sample.
class TapeExhaustedError : public Error {
public:
    using Error::Error;
};

// Operation not offered by this action (e.g. canonical form without
// unique representation).
class UnsupportedOperationError : public Error {
public:
    using Error::Error;
};

// Exhaustive enumeration would exceed the configured bound.
class EnumerationBoundError : public Error {
public:
    using Error::Error;
};

// restrict_to_orbit on an action whose free flag is not set.
class NotFreeError : public Error {
public:
    using Error::Error;
};

class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// A multi-pair instance with zero pairs.
class EmptyInstanceError : public Error {
public:
    using Error::Error;
};

// Prover received a challenge lying in neither input orbit; signals a
// corrupted message.
class NeitherOrbitError : public Error {
public:
    using Error::Error;
};

class TransportError : public Error {
public:
    using Error::Error;
};

}  // namespace gac
