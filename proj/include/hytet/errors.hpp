#pragma once

#include <stdexcept>
#include <string>

namespace hytet {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (negative length,
/// NaN, angle outside [0, pi], ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Cofactor signs say the matrix is not the edge matrix of a tetrahedron.
class NotATetrahedronError : public Error {
public:
    using Error::Error;
};

/// Two expressions that must agree algebraically disagree numerically.
class NumericalInconsistencyError : public Error {
public:
    using Error::Error;
};

/// Dihedral angles do not describe a compact tetrahedron.
class InconsistentAnglesError : public Error {
public:
    using Error::Error;
};

/// Flat configuration where a rank-4 factorization is required.
class DegenerateEmbeddingError : public Error {
public:
    DegenerateEmbeddingError(const std::string& what, int rank)
        : Error(what), rank_(rank) {}
    int rank() const noexcept { return rank_; }

private:
    int rank_;
};

/// -E does not have Minkowski signature (1,3).
class NotRealizableError : public Error {
public:
    using Error::Error;
};

}  // namespace hytet
