#ifndef RFCRIT_POLYNOMIAL_HPP
#define RFCRIT_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "rfcrit/rational_function.hpp"

namespace rfcrit {

/// Dense complex polynomial, coefficients in ascending degree order. The
/// trailing coefficient is nonzero except for the zero polynomial, which is
/// the empty list.
class Polynomial {
public:
    Polynomial() = default;

    /// Takes coefficients in ascending order; exact-zero leading
    /// coefficients are trimmed.
    explicit Polynomial(std::vector<Complex> coefficients);

    /// Monic polynomial with the given roots and multiplicities, built by
    /// repeated linear-factor multiplication. The empty list gives the
    /// constant 1.
    static Polynomial from_roots(const std::vector<std::pair<Complex, int>>& roots);

    const std::vector<Complex>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Complex leading_coefficient() const { return coeffs_.empty() ? Complex(0) : coeffs_.back(); }

    /// Horner evaluation.
    Complex eval(Complex z) const;

    /// Largest coefficient magnitude (0 for the zero polynomial).
    double max_coefficient_magnitude() const;

    /// Same roots, coefficients divided by the largest magnitude.
    Polynomial normalized() const;

private:
    std::vector<Complex> coeffs_;
};

/// The logarithmic derivative f'/f of a rational function, as the ratio of
/// two polynomials:
///
///     numerator(z)   = sum_i m_i * prod_{j != i} (z - w_j)
///     denominator(z) = prod_j (z - w_j)
///
/// The numerator's roots are the non-trivial critical points of f; the
/// denominator is monic with the k distinct locations as simple roots. The
/// numerator has degree <= k-1, with its coefficient of z^(k-1) equal to the
/// multiplicity sum.
struct LogDerivative {
    Polynomial numerator;
    Polynomial denominator;
    RationalFunction source;

    /// Evaluates via the partial-fraction sum over the source points, which
    /// is numerically benign away from the poles; agrees with
    /// numerator/denominator up to rounding. Throws EvaluationAtPoleError if
    /// z is exactly a stored location.
    Complex eval(Complex z) const;

    /// Evaluates numerator(z) / denominator(z) directly.
    Complex eval_ratio(Complex z) const;
};

/// Builds the logarithmic derivative of a nonempty function. Multiplicities
/// are carried as integer factors; locations are never repeated, so
/// high-multiplicity factors are not expanded.
LogDerivative log_derivative(const RationalFunction& f);

/// The partial-fraction sum  sum_i m_i / (z - w_i). Throws
/// EvaluationAtPoleError when z is exactly a stored location.
Complex partial_fraction_sum(const RationalFunction& f, Complex z);

/// Derivative of the partial-fraction sum:  -sum_i m_i / (z - w_i)^2.
Complex partial_fraction_sum_derivative(const RationalFunction& f, Complex z);

/// Number of non-trivial critical points of a nonempty function, counted
/// with multiplicity on the sphere: one less than the number of distinct
/// zeros and poles. The finite count is the numerator degree; the difference
/// sits at infinity.
int expected_critical_count(const RationalFunction& f);

} // namespace rfcrit

#endif
