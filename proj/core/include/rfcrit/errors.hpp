#ifndef RFCRIT_ERRORS_HPP
#define RFCRIT_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfcrit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two weighted points were constructed at the same coordinates.
class DuplicateLocationError : public Error {
public:
    using Error::Error;
};

/// A weighted point was constructed with multiplicity zero.
class ZeroMultiplicityError : public Error {
public:
    using Error::Error;
};

/// A coordinate was NaN or infinite.
class NonFiniteCoordinateError : public Error {
public:
    using Error::Error;
};

/// An operation that needs at least one zero or pole got the constant function.
class EmptyFunctionError : public Error {
public:
    using Error::Error;
};

/// The logarithmic derivative was evaluated exactly at a zero or pole.
class EvaluationAtPoleError : public Error {
public:
    using Error::Error;
};

/// A query point was required to be a zero or pole but is not.
class NotAZeroOrPoleError : public Error {
public:
    using Error::Error;
};

/// A stated precondition does not hold for the given arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Root finding was asked to factor the zero polynomial.
class ZeroPolynomialError : public Error {
public:
    using Error::Error;
};

/// The iteration did not converge; carries the best iterates seen.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what,
                        std::vector<std::complex<double>> best,
                        std::vector<double> residuals)
        : Error(what), best_iterates(std::move(best)), residuals(std::move(residuals)) {}

    std::vector<std::complex<double>> best_iterates;
    std::vector<double> residuals;
};

/// A sampling circle passes exactly through a zero or pole.
class CircleTouchesPoleError : public Error {
public:
    using Error::Error;
};

/// The certified lower bound on a circle minimum is not positive even at the
/// sample-count cap.
class UncertifiableMinimumError : public Error {
public:
    using Error::Error;
};

/// The requested neighbourhood radius exceeds the separation of the
/// distinguished points.
class EpsTooLargeError : public Error {
public:
    using Error::Error;
};

/// Predicted cluster centers are closer than twice the matching radius.
class OverlappingCentersError : public Error {
public:
    using Error::Error;
};

/// The ensemble generator could not place a point at the requested
/// separation within the redraw budget.
class SeparationUnachievableError : public Error {
public:
    using Error::Error;
};

/// A polynomial zero lies outside the unit disk where the bound requires it
/// inside.
class ZeroOutsideUnitDiskError : public Error {
public:
    using Error::Error;
};

/// A function document could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace rfcrit

#endif
