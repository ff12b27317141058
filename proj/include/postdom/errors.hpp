#pragma once

#include <stdexcept>
#include <string>

namespace postdom {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Zero denominator, division by zero.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

// A value violates a type invariant (non-normalized prior, bad kernel row...).
class InvariantError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Conditioning on an event of probability zero.
class ConditioningError : public Error {
public:
    using Error::Error;
};

class EmptyModelError : public Error {
public:
    using Error::Error;
};

// Brute-force oracle asked to enumerate more points than its bound allows.
class OracleSizeError : public Error {
public:
    using Error::Error;
};

// Malformed text or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace postdom
