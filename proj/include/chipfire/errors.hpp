#pragma once

#include <stdexcept>
#include <string>

namespace chipfire {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LoopArcError : public Error {
public:
    using Error::Error;
};

class VertexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class NotASubsetError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class RankDeficientError : public Error {
public:
    using Error::Error;
};

class NotStronglyConnectedError : public Error {
public:
    using Error::Error;
};

class NotEulerianError : public Error {
public:
    using Error::Error;
};

class NotBidirectedError : public Error {
public:
    using Error::Error;
};

class StepLimitExceededError : public Error {
public:
    using Error::Error;
};

class SizeLimitExceededError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// Graph/distribution text could not be parsed; carries a 1-based line number
/// (0 when no line applies).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line) : Error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace chipfire
