#pragma once

#include <stdexcept>
#include <string>

namespace hfinite {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shapes or variable counts do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An interpolation system has more unknowns than independent samples.
class UnderdeterminedError : public Error {
public:
    using Error::Error;
};

// A word excursion or neighbouring slot falls outside the stored window.
class WindowError : public Error {
public:
    using Error::Error;
};

// A weight is outside the scope of the classification.
class NotInScope : public Error {
public:
    using Error::Error;
};

}  // namespace hfinite
