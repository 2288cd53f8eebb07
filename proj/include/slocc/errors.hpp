#pragma once

#include <stdexcept>
#include <string>

namespace slocc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-square determinant, size mismatch between group element and state.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Shape outside the supported set, or a classifier called on the wrong shape.
class ShapeError : public Error {
public:
    using Error::Error;
};

// The zero hypermatrix is not a projective state.
class ZeroStateError : public Error {
public:
    using Error::Error;
};

// A nullity vector matched no registry row. Indicates a defect, never user error.
class UnmatchedPatternError : public Error {
public:
    using Error::Error;
};

class UnknownLabelError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Malformed transvection plan.
class StructuralError : public Error {
public:
    using Error::Error;
};

// Requested computation exceeds a configured size bound.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace slocc
