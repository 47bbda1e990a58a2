#include "rfcrit/polynomial.hpp"

#include <cmath>

#include "rfcrit/errors.hpp"

namespace rfcrit {

namespace {

void trim(std::vector<Complex>& c) {
    while (!c.empty() && c.back() == Complex(0)) c.pop_back();
}

// p *= (z - root), in place.
void multiply_linear(std::vector<Complex>& c, Complex root) {
    c.push_back(Complex(0));
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - root * c[i];
    c[0] = -root * c[0];
}

} // namespace

Polynomial::Polynomial(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients)) {
    trim(coeffs_);
}

Polynomial Polynomial::from_roots(const std::vector<std::pair<Complex, int>>& roots) {
    std::vector<Complex> c{Complex(1)};
    for (const auto& [root, multiplicity] : roots)
        for (int i = 0; i < multiplicity; ++i) multiply_linear(c, root);
    return Polynomial(std::move(c));
}

Complex Polynomial::eval(Complex z) const {
    Complex value(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) value = value * z + coeffs_[i];
    return value;
}

double Polynomial::max_coefficient_magnitude() const {
    double m = 0.0;
    for (Complex c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Polynomial Polynomial::normalized() const {
    const double m = max_coefficient_magnitude();
    if (m == 0.0) return *this;
    std::vector<Complex> c = coeffs_;
    for (Complex& x : c) x /= m;
    return Polynomial(std::move(c));
}

Complex LogDerivative::eval(Complex z) const { return partial_fraction_sum(source, z); }

Complex LogDerivative::eval_ratio(Complex z) const {
    return numerator.eval(z) / denominator.eval(z);
}

LogDerivative log_derivative(const RationalFunction& f) {
    if (f.empty()) throw EmptyFunctionError("log derivative of the constant function");

    // Incremental sum-of-products: after absorbing points 0..i-1,
    //   den = prod_{j<i} (z - w_j),
    //   num = sum_{t<i} m_t * prod_{j<i, j!=t} (z - w_j).
    // Absorbing point i:  num <- num*(z - w_i) + m_i*den,  den <- den*(z - w_i).
    // O(k^2) total, no division, and the coefficient of z^(k-1) in num stays
    // the exact integer multiplicity sum.
    std::vector<Complex> num;
    std::vector<Complex> den{Complex(1)};
    for (const WeightedPoint& p : f.points()) {
        if (!num.empty()) multiply_linear(num, p.location);
        num.resize(den.size(), Complex(0));
        const double m = static_cast<double>(p.multiplicity);
        for (std::size_t i = 0; i < den.size(); ++i) num[i] += m * den[i];
        multiply_linear(den, p.location);
    }

    LogDerivative ld;
    ld.numerator = Polynomial(std::move(num));
    ld.denominator = Polynomial(std::move(den));
    ld.source = f;
    return ld;
}

Complex partial_fraction_sum(const RationalFunction& f, Complex z) {
    Complex sum(0);
    for (const WeightedPoint& p : f.points()) {
        if (same_location(p.location, z))
            throw EvaluationAtPoleError("evaluation at a zero or pole location");
        sum += static_cast<double>(p.multiplicity) / (z - p.location);
    }
    return sum;
}

Complex partial_fraction_sum_derivative(const RationalFunction& f, Complex z) {
    Complex sum(0);
    for (const WeightedPoint& p : f.points()) {
        if (same_location(p.location, z))
            throw EvaluationAtPoleError("evaluation at a zero or pole location");
        const Complex d = z - p.location;
        sum -= static_cast<double>(p.multiplicity) / (d * d);
    }
    return sum;
}

int expected_critical_count(const RationalFunction& f) {
    if (f.empty()) throw EmptyFunctionError("critical point count of the constant function");
    return f.distinct_count() - 1;
}

} // namespace rfcrit
