#pragma once

#include <stdexcept>
#include <string>

namespace dirackit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live on spaces of different dimension (or a shape is wrong).
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A spanning family was expected to be linearly independent but is not.
class RankDeficientBasis : public Error {
public:
    using Error::Error;
};

/// A family of sections was expected to be isotropic but a Gram entry is non-zero.
class NotIsotropic : public Error {
public:
    using Error::Error;
};

/// A 2-form was required to be closed.
class NonClosedForm : public Error {
public:
    using Error::Error;
};

/// No polynomial annihilator basis could be found for a distribution.
class AnnihilatorNotFound : public Error {
public:
    using Error::Error;
};

/// A tangent vector is not in the image of the anchor at the requested point.
class NotInAnchorRange : public Error {
public:
    using Error::Error;
};

/// A point lies outside the declared coordinate box.
class OutsideDomain : public Error {
public:
    using Error::Error;
};

/// A parametrization does not map into the requested level set.
class LevelSetMismatch : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition (regularity, tangency, invariance, ...) does not hold.
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// Numerical quadrature did not converge to the requested tolerance.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// Malformed input data (JSON scenes, polynomial term lists, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace dirackit
