#ifndef RFCRIT_BOUNDS_HPP
#define RFCRIT_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include "rfcrit/rational_function.hpp"

namespace rfcrit {

/// A union of circles sharing one radius: the boundary of the
/// iota-neighbourhood of a finite center set.
struct CircleFamily {
    std::vector<Complex> centers;
    double radius = 0.0;
};

enum class ExtremumKind { min, max };

/// A one-sided bound on the extremum of |f'/f| over a circle family,
/// obtained from equispaced samples plus a Lipschitz correction:
///
///   kind == min: true minimum >= value  (value = sampled min - L*delta/2)
///   kind == max: true maximum <= value  (value = sampled max + L*delta/2)
///
/// where delta is the arc-length spacing between samples and L the Lipschitz
/// bound sum|m_i| / gap^2 with gap the circle-to-point clearance. A min is
/// certified only when the bound is positive.
struct CertifiedExtremum {
    double value = 0.0;
    ExtremumKind kind = ExtremumKind::min;
    double lipschitz_bound = 0.0;
    std::uint32_t sample_count = 0;
    bool certified = false;
};

/// Default number of samples per circle; doubled on uncertifiable minima up
/// to kMaxSamplesPerCircle.
inline constexpr std::uint32_t kDefaultSamplesPerCircle = 4096;
inline constexpr std::uint32_t kMaxSamplesPerCircle = 1u << 20;

/// One-sided bound on the extremum of the partial-fraction modulus
/// |sum m_i/(z - w_i)| over the circle family. Throws CircleTouchesPoleError
/// when a circle passes exactly through a zero or pole.
CertifiedExtremum circle_extremum(const RationalFunction& f, const CircleFamily& circles,
                                  ExtremumKind kind, std::uint32_t samples_per_circle);

/// Radius of a punctured ball about the zero or pole z0 that is guaranteed
/// free of critical points:
///
///     d * |m| / (d * rho + |m|),
///
/// with d the distance to the nearest other zero/pole, rho the
/// inverse-distance sum at z0, and m the multiplicity of z0. Returns
/// +infinity for a function whose only point is z0 (no critical points
/// exist at all). Throws NotAZeroOrPoleError when z0 is not a location.
double exclusion_radius(const RationalFunction& f, Complex z0);

/// The classical critical-point-free radius d * |m| / degree, which the
/// exclusion radius above always matches or improves.
double alexander_walsh_radius(const RationalFunction& f, Complex z0);

/// Largest inverse-distance sum of a factor h at z0 that still keeps
/// (z - z0)^k * h(z) free of critical points in the punctured ball of radius
/// R:  |k| / ((|k| + 1) * R).
double corollary1_max_rho(int k, double R);

/// The inverse-distance sum ceiling |m| * (1/R - 1/d) obtained by solving
/// the exclusion-radius inequality for rho; negative when no rho achieves an
/// exclusion radius of R.
double inequality1_rho_bound(int m, double R, double d);

/// Checks the executable form of the hypotheses under which theorem2_K is
/// defined: eps below half the minimum separation of g's zeros, poles, and
/// critical points; eps < R; and all those points inside the open ball of
/// radius R - eps.
bool theorem2_validate(const RationalFunction& g, double R, double eps);

/// The constant K > 0 such that any h with rho_h(0) < K and h(0) finite
/// nonzero leaves g*h with exactly g's critical points (with multiplicity)
/// inside eps-balls and no others inside the R-ball:
/// half of the certified minimum of |g'/g| over the eps-circles about g's
/// zeros, poles, and critical points together with the R-circle about the
/// origin, capped strictly below 1/(2R). Throws PreconditionError when
/// theorem2_validate fails and UncertifiableMinimumError when the minimum
/// cannot be certified positive.
double theorem2_K(const RationalFunction& g, double R, double eps,
                  std::uint32_t samples_per_circle = kDefaultSamplesPerCircle);

/// The constant L > 0 that plays theorem2_K's role uniformly over all monic
/// degree-n polynomials with zeros in the unit disk; a pure closed form in
/// (n, R, eps), independent of the polynomial:
///
///   L = min( (n/2) * t^(n-1) / (2 + t)^n,          t = eps / (2(2n-1))
///            1 / (2 + t),
///            (n/2) * (R - 1) / ((R + 1)^2 + 1) ).
double theorem3_L(int n, double R, double eps);

/// Certified extrema of the two logarithmic derivatives over the eps-circles
/// about every zero, pole, and critical point of g and h, and the least
/// power n that makes n * min > max.
struct Theorem4Constants {
    double log_deriv_max_g = 0.0; // certified upper bound for |g'/g|
    double log_deriv_min_h = 0.0; // certified lower bound for |h'/h|
    int threshold = 1;
};

/// Computes the constants above. h must be non-constant; eps must be below
/// the minimum pairwise distance among the distinguished points of g and h
/// (EpsTooLargeError otherwise). Throws UncertifiableMinimumError when the
/// h-minimum cannot be certified positive.
Theorem4Constants theorem4_constants(const RationalFunction& g, const RationalFunction& h,
                                     double eps,
                                     std::uint32_t samples_per_circle = kDefaultSamplesPerCircle);

/// The least n with n * m > M for the certified constants above.
int theorem4_threshold(const RationalFunction& g, const RationalFunction& h, double eps,
                       std::uint32_t samples_per_circle = kDefaultSamplesPerCircle);

} // namespace rfcrit

#endif
