#ifndef RFCRIT_ROOTS_HPP
#define RFCRIT_ROOTS_HPP

#include <vector>

#include "rfcrit/polynomial.hpp"
#include "rfcrit/rational_function.hpp"

namespace rfcrit {

/// A located root with its recovered multiplicity.
struct Root {
    Complex location;
    int multiplicity = 1;
};

/// Roots of a polynomial (or critical points of a rational function) with
/// residual certificates. For critical points, multiplicity_sum() plus
/// deficiency_at_infinity equals one less than the number of distinct zeros
/// and poles of the source function.
struct RootResult {
    std::vector<Root> roots;
    std::vector<double> residuals; // aligned with roots
    int deficiency_at_infinity = 0;

    int multiplicity_sum() const {
        int total = 0;
        for (const Root& r : roots) total += r.multiplicity;
        return total;
    }
};

/// All deg(p) complex roots, counted with multiplicity.
///
/// Simultaneous Aberth-Ehrlich correction from equispaced circle guesses
/// (fixed irrational angular offset, no randomness anywhere, so results are
/// reproducible bit for bit). Approximations are frozen once the residual
/// falls below the running rounding bound of the Horner evaluation; the
/// sweep stops when every approximation is frozen or the largest relative
/// correction drops under tol. Multiplicities are recovered by
/// single-linkage clustering at radius sqrt(tol) scaled by root magnitude.
///
/// Residual certificate: |p(r)| / (max|coeff| * max(1,|r|)^deg) <= tol for
/// every reported root r. Throws NonConvergenceError (carrying the best
/// iterates) if the iteration stalls or the certificate fails, and
/// ZeroPolynomialError for the zero polynomial.
RootResult find_roots(const Polynomial& p, double tol = 1e-12, int max_iters = 500);

/// Non-trivial critical points of a nonempty rational function: the roots of
/// the logarithmic-derivative numerator, polished against the
/// partial-fraction sum. Residuals are |sum_i m_i / (r - w_i)|, the
/// semantically meaningful measure, and must stay below tol.
/// deficiency_at_infinity reports the critical points that sit at infinity
/// rather than in the finite plane.
RootResult critical_points(const RationalFunction& f, double tol = 1e-10);

/// Single-linkage clustering at the given linkage distance; each cluster is
/// reported as (centroid, size), sorted by real then imaginary part.
std::vector<Root> cluster_roots(const std::vector<Complex>& raw, double radius);

} // namespace rfcrit

#endif
