#include "rfcrit/rational_function.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rfcrit/errors.hpp"

namespace rfcrit {

namespace {

std::string describe(Complex z) {
    std::ostringstream os;
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

void validate(const std::vector<WeightedPoint>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        const WeightedPoint& p = points[i];
        if (!std::isfinite(p.location.real()) || !std::isfinite(p.location.imag()))
            throw NonFiniteCoordinateError("non-finite coordinate at point index " +
                                           std::to_string(i));
        if (p.multiplicity == 0)
            throw ZeroMultiplicityError("zero multiplicity at location " +
                                        describe(p.location));
        for (std::size_t j = 0; j < i; ++j) {
            if (same_location(points[j].location, p.location))
                throw DuplicateLocationError("duplicate location " + describe(p.location));
        }
    }
}

} // namespace

RationalFunction::RationalFunction(std::vector<WeightedPoint> points)
    : points_(std::move(points)) {
    validate(points_);
}

int RationalFunction::multiplicity_at(Complex z) const {
    for (const WeightedPoint& p : points_)
        if (same_location(p.location, z)) return p.multiplicity;
    return 0;
}

int RationalFunction::degree() const {
    int total = 0;
    for (const WeightedPoint& p : points_) total += std::abs(p.multiplicity);
    return total;
}

double RationalFunction::min_distance(Complex z) const {
    double best = std::numeric_limits<double>::infinity();
    for (const WeightedPoint& p : points_) {
        if (same_location(p.location, z)) continue;
        best = std::min(best, std::abs(z - p.location));
    }
    return best;
}

double RationalFunction::inverse_distance_sum(Complex z) const {
    double sum = 0.0;
    for (const WeightedPoint& p : points_) {
        if (same_location(p.location, z)) continue;
        sum += std::abs(p.multiplicity) / std::abs(z - p.location);
    }
    return sum;
}

double inverse_distance_sum_bound(const RationalFunction& f, Complex z1, Complex z2) {
    if (f.multiplicity_at(z1) != 0)
        throw PreconditionError("continuity bound requires z1 to be neither a zero nor a pole");
    const double d = f.min_distance(z1);
    const double shift = std::abs(z2 - z1);
    if (!(shift < d))
        throw PreconditionError("continuity bound requires |z2 - z1| < min_distance(z1)");
    const double mass = f.inverse_distance_sum(z1);
    if (std::isinf(d)) return mass; // empty function: mass is 0 everywhere
    return mass * d / (d - shift);
}

RationalFunction product(const RationalFunction& a, const RationalFunction& b) {
    std::vector<WeightedPoint> pts = a.points();
    pts.insert(pts.end(), b.points().begin(), b.points().end());
    return RationalFunction(std::move(pts));
}

RationalFunction product_with_power(const RationalFunction& a, const RationalFunction& b,
                                    int n) {
    std::vector<WeightedPoint> pts = a.points();
    for (const WeightedPoint& p : b.points())
        pts.push_back({p.location, p.multiplicity * n});
    return RationalFunction(std::move(pts));
}

} // namespace rfcrit
