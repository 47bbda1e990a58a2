#ifndef RFCRIT_RATIONAL_FUNCTION_HPP
#define RFCRIT_RATIONAL_FUNCTION_HPP

#include <complex>
#include <vector>

namespace rfcrit {

using Complex = std::complex<double>;

/// Exact coordinate identity. Locations are constructed, not measured, so
/// bitwise comparison of the stored coordinates is well-defined.
inline bool same_location(Complex a, Complex b) {
    return a.real() == b.real() && a.imag() == b.imag();
}

/// A zero or pole: a finite plane location with a nonzero signed integer
/// multiplicity (positive for a zero, negative for a pole).
struct WeightedPoint {
    Complex location;
    int multiplicity = 0;
};

/// A rational function up to a nonzero constant factor, represented by its
/// finite zeros and poles. The point list is validated on construction
/// (finite coordinates, nonzero multiplicities, pairwise distinct locations)
/// and immutable afterwards; instances are safe to share across threads.
///
/// The empty list is the constant function.
class RationalFunction {
public:
    RationalFunction() = default;

    /// Validates and stores the point list. Points with identical locations
    /// are rejected, never merged.
    explicit RationalFunction(std::vector<WeightedPoint> points);

    const std::vector<WeightedPoint>& points() const { return points_; }
    bool empty() const { return points_.empty(); }

    /// Number of distinct zero/pole locations (the k of every counting
    /// argument).
    int distinct_count() const { return static_cast<int>(points_.size()); }

    /// Stored multiplicity if z is exactly a zero or pole location, else 0.
    int multiplicity_at(Complex z) const;

    /// Total number of finite zeros and poles counted with multiplicity.
    int degree() const;

    /// Smallest nonzero distance from z to a zero or pole; +infinity when no
    /// such point exists.
    double min_distance(Complex z) const;

    /// Sum of |multiplicity| / |z - w| over all zeros and poles w other than
    /// z itself; 0 for the empty sum. The inverse-distance mass that drives
    /// every bound in this library.
    double inverse_distance_sum(Complex z) const;

private:
    std::vector<WeightedPoint> points_;
};

/// Upper bound for inverse_distance_sum at z2 in terms of its value at z1:
///
///     sum(z2) <= sum(z1) * d / (d - |z2 - z1|),   d = f.min_distance(z1).
///
/// Requires z1 to be neither a zero nor a pole and |z2 - z1| < d; throws
/// PreconditionError otherwise.
double inverse_distance_sum_bound(const RationalFunction& f, Complex z1, Complex z2);

/// Concatenates the point lists of two functions (the product function).
/// Throws DuplicateLocationError if they share a location.
RationalFunction product(const RationalFunction& a, const RationalFunction& b);

/// The function a * b^n: b's multiplicities scaled by n, then merged with
/// a's points.
RationalFunction product_with_power(const RationalFunction& a, const RationalFunction& b, int n);

} // namespace rfcrit

#endif
