#pragma once

#include <stdexcept>
#include <string>

namespace centrality {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class SelfLoop : public Error {
public:
    using Error::Error;
};

class InvalidOrder : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class Overflow : public Error {
public:
    using Error::Error;
};

class InvalidParam : public Error {
public:
    using Error::Error;
};

class RadiusTooSmall : public Error {
public:
    using Error::Error;
};

class NonFinite : public Error {
public:
    using Error::Error;
};

class OrderExceeded : public Error {
public:
    using Error::Error;
};

class IntegerOverflow : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DuplicateVertexInHyperedge : public Error {
public:
    using Error::Error;
};

} // namespace centrality
