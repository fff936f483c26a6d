#pragma once

#include <stdexcept>
#include <string>

namespace g2deg {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// The right-hand side of a linear system is not in the image.
class Inconsistent : public Error {
public:
    using Error::Error;
};

/// The fibre's intersection form has a radical larger than the fibre class.
class RadicalTooLarge : public Error {
public:
    using Error::Error;
};

class UnknownCase : public Error {
public:
    using Error::Error;
};

class ParamOutOfRange : public Error {
public:
    using Error::Error;
};

class MissingMap : public Error {
public:
    using Error::Error;
};

class DegreeOutOfRange : public Error {
public:
    using Error::Error;
};

/// Two independent rank computations disagreed. Always a bug.
class MethodDisagreement : public Error {
public:
    using Error::Error;
};

/// Malformed input document or reference.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace g2deg
