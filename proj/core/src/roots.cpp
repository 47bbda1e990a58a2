#include "rfcrit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rfcrit/errors.hpp"

namespace rfcrit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Fixed irrational angular offset for the initial circle, breaking the
// symmetry of polynomials with symmetric root sets (inverse golden ratio,
// radians).
constexpr double kAngularOffset = 0.61803398874989484820;

struct HornerEval {
    Complex value;
    Complex derivative;
    double magnitude_sum; // sum_i |c_i| |z|^i, scale for the rounding bound
};

HornerEval eval_with_derivative(const std::vector<Complex>& c, Complex z) {
    const double az = std::abs(z);
    Complex p = c.back();
    Complex dp(0);
    double s = std::abs(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
        s = s * az + std::abs(c[i]);
    }
    return {p, dp, s};
}

// Single-linkage clusters where points i, j link whenever
// |r_i - r_j| <= base * scale(i, j); the public fixed-radius variant uses
// scale = 1.
std::vector<Root> cluster_with_scale(const std::vector<Complex>& raw, double base,
                                     bool scale_by_magnitude) {
    const std::size_t n = raw.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double link = base;
            if (scale_by_magnitude)
                link *= std::max({1.0, std::abs(raw[i]), std::abs(raw[j])});
            if (std::abs(raw[i] - raw[j]) <= link) parent[find(i)] = find(j);
        }
    }
    std::vector<Root> clusters;
    std::vector<int> cluster_of(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (cluster_of[root] < 0) {
            cluster_of[root] = static_cast<int>(clusters.size());
            clusters.push_back({Complex(0), 0});
        }
        Root& cl = clusters[cluster_of[root]];
        cl.location += raw[i];
        cl.multiplicity += 1;
    }
    for (Root& cl : clusters) cl.location /= static_cast<double>(cl.multiplicity);
    std::sort(clusters.begin(), clusters.end(), [](const Root& a, const Root& b) {
        if (a.location.real() != b.location.real())
            return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return clusters;
}

std::vector<double> poly_residuals(const Polynomial& p, const std::vector<Root>& roots) {
    const int deg = p.degree();
    const double scale = p.max_coefficient_magnitude();
    std::vector<double> res;
    res.reserve(roots.size());
    for (const Root& r : roots) {
        const double denom = scale * std::pow(std::max(1.0, std::abs(r.location)), deg);
        res.push_back(std::abs(p.eval(r.location)) / denom);
    }
    return res;
}

} // namespace

std::vector<Root> cluster_roots(const std::vector<Complex>& raw, double radius) {
    return cluster_with_scale(raw, radius, false);
}

RootResult find_roots(const Polynomial& p, double tol, int max_iters) {
    if (p.is_zero()) throw ZeroPolynomialError("cannot factor the zero polynomial");
    const Polynomial q = p.normalized();
    const int n = q.degree();
    if (n == 0) return RootResult{};

    const std::vector<Complex>& c = q.coefficients();

    // Initial guesses on a circle just outside the Cauchy root bound.
    double ratio = 0.0;
    const double lead = std::abs(c.back());
    for (int i = 0; i < n; ++i) ratio = std::max(ratio, std::abs(c[i]) / lead);
    const double radius = 1.0 + ratio;
    std::vector<Complex> z(n);
    for (int j = 0; j < n; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / n + kAngularOffset;
        z[j] = radius * Complex(std::cos(angle), std::sin(angle));
    }

    std::vector<bool> frozen(n, false);
    bool converged = false;
    for (int iter = 0; iter < max_iters && !converged; ++iter) {
        double max_correction = 0.0;
        bool all_frozen = true;
        for (int j = 0; j < n; ++j) {
            if (frozen[j]) continue;
            const HornerEval h = eval_with_derivative(c, z[j]);
            // Below the attainable evaluation accuracy: stop moving this one.
            if (std::abs(h.value) <= kEps * (4.0 * n + 4.0) * h.magnitude_sum) {
                frozen[j] = true;
                continue;
            }
            all_frozen = false;
            if (h.derivative == Complex(0)) {
                // Exactly at a stationary point that is not a root; nudge
                // deterministically and keep going.
                z[j] += Complex(1e-8, 1e-8) * std::max(1.0, std::abs(z[j]));
                max_correction = std::numeric_limits<double>::infinity();
                continue;
            }
            const Complex newton = h.value / h.derivative;
            Complex repulsion(0);
            bool collision = false;
            for (int l = 0; l < n; ++l) {
                if (l == j) continue;
                const Complex d = z[j] - z[l];
                if (d == Complex(0)) {
                    collision = true;
                    break;
                }
                repulsion += 1.0 / d;
            }
            if (collision) {
                z[j] += Complex(1e-8, -1e-8) * std::max(1.0, std::abs(z[j]));
                max_correction = std::numeric_limits<double>::infinity();
                continue;
            }
            const Complex denom = 1.0 - newton * repulsion;
            const Complex correction = (denom == Complex(0)) ? newton : newton / denom;
            z[j] -= correction;
            max_correction =
                std::max(max_correction, std::abs(correction) / std::max(1.0, std::abs(z[j])));
        }
        converged = all_frozen || max_correction < tol;
    }

    RootResult result;
    result.roots = cluster_with_scale(z, std::sqrt(tol), true);
    result.residuals = poly_residuals(q, result.roots);

    if (!converged) {
        throw NonConvergenceError("root iteration did not converge within the step budget", z,
                                  result.residuals);
    }
    for (double r : result.residuals) {
        if (!(r <= tol))
            throw NonConvergenceError("root residual certificate failed", z, result.residuals);
    }
    return result;
}

RootResult critical_points(const RationalFunction& f, double tol) {
    const LogDerivative ld = log_derivative(f);
    const int k = f.distinct_count();

    RootResult result;
    if (ld.numerator.degree() > 0) {
        result = find_roots(ld.numerator.normalized(), std::min(tol, 1e-12), 500);

        // Polish each cluster centroid against the partial-fraction sum with
        // a multiplicity-aware Newton step; this is the residual that
        // matters, and the centroid is already accurate enough for the step
        // to be a strict contraction.
        for (Root& r : result.roots) {
            for (int step = 0; step < 4; ++step) {
                const Complex s = partial_fraction_sum(f, r.location);
                const Complex ds = partial_fraction_sum_derivative(f, r.location);
                if (ds == Complex(0)) break;
                const Complex delta =
                    static_cast<double>(r.multiplicity) * s / ds;
                if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag())) break;
                if (std::abs(delta) > 1e-2 * std::max(1.0, std::abs(r.location))) break;
                r.location -= delta;
                if (std::abs(delta) <= kEps * std::abs(r.location)) break;
            }
        }
        result.residuals.clear();
        for (const Root& r : result.roots)
            result.residuals.push_back(std::abs(partial_fraction_sum(f, r.location)));
        for (double res : result.residuals) {
            if (!(res <= tol)) {
                std::vector<Complex> best;
                for (const Root& r : result.roots) best.push_back(r.location);
                throw NonConvergenceError("critical point residual above tolerance", best,
                                          result.residuals);
            }
        }
    }
    result.deficiency_at_infinity = (k - 1) - std::max(0, ld.numerator.degree());
    return result;
}

} // namespace rfcrit
