#pragma once

#include <stdexcept>
#include <string>

namespace curvcert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad text, wrong dimensions, violated preconditions.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class ParseError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class PartExceedsAmbient : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class IndexOutOfRange : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotRegular : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotToric : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class InvalidStaircase : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class InfiniteColength : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class SocleCheckFailed : public Error {
public:
    using Error::Error;
};

/// A configured size cap (expansion order, enumeration budget) was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

class CapExceeded : public ResourceLimit {
public:
    using ResourceLimit::ResourceLimit;
};

class BudgetExceeded : public ResourceLimit {
public:
    using ResourceLimit::ResourceLimit;
};

}  // namespace curvcert
