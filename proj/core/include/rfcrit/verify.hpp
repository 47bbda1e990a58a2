#ifndef RFCRIT_VERIFY_HPP
#define RFCRIT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rfcrit/bounds.hpp"
#include "rfcrit/rational_function.hpp"
#include "rfcrit/roots.hpp"

namespace rfcrit {

/// The statements the harness can check against the root-finding oracle.
enum class TheoremId {
    thm1,         // exclusion radius around a zero or pole
    cor1,         // rho threshold for (z - z0)^k * h
    thm2,         // critical points of g*h under a distant factor h
    thm3,         // polynomial case with the uniform constant L
    thm4,         // critical points of g*h^n at the power threshold
    lemma1,       // continuity bound for the inverse-distance sum
    lemma2,       // zeros/poles of the logarithmic derivative
    remark_count, // finite critical points + deficiency = k - 1
};

enum class TrialStatus { pass, fail, skipped, inconclusive };

const char* to_string(TheoremId id);
const char* to_string(TrialStatus status);
std::optional<TheoremId> theorem_id_from_string(std::string_view name);

/// One checked instance. min_margin is the smallest normalized slack among
/// the inequalities the trial verified (+infinity when nothing constrains
/// it, NaN for skipped/inconclusive trials).
struct TrialRecord {
    int trial_index = 0;
    std::string inputs_digest;
    double computed_constant = 0.0;
    int oracle_count = 0;
    double min_margin = 0.0;
    TrialStatus status = TrialStatus::pass;
};

struct VerificationReport {
    TheoremId theorem = TheoremId::thm1;
    std::vector<TrialRecord> trials;

    int count(TrialStatus status) const;
    int failures() const { return count(TrialStatus::fail); }

    /// Smallest margin over pass/fail trials; +infinity when there are none.
    double min_margin() const;
};

/// Seeded generator configuration for random rational-function ensembles.
/// Locations are drawn area-uniformly from the annulus and redrawn until the
/// pairwise separation floor holds; multiplicities are uniform on
/// [1, mult_max], negated with probability 1/2 when poles are allowed.
struct EnsembleConfig {
    std::uint64_t seed = 0;
    std::uint32_t trials = 1;
    int points_min = 2;
    int points_max = 8;
    double annulus_inner = 0.25;
    double annulus_outer = 2.0;
    int mult_max = 3;
    bool allow_poles = true;
    double min_separation = 0.1;
};

/// The per-theorem configuration used by run_suite and the command line.
EnsembleConfig default_ensemble(TheoremId id, std::uint64_t seed, std::uint32_t trials);

/// Deterministic given the seed. Throws SeparationUnachievableError after
/// 10^4 failed placement attempts for a point.
std::vector<RationalFunction> generate_ensemble(const EnsembleConfig& cfg);

/// No critical point may fall strictly inside the exclusion ball shrunk by
/// the relative tolerance (points within tol of the boundary count as
/// outside: the tight families sit exactly on it). z0 must be a zero or
/// pole.
TrialRecord check_theorem1(const RationalFunction& f, Complex z0, double tol);

/// Builds (z - z0)^k * h and requires the oracle to find no critical point
/// inside the punctured R-ball. Trials whose hypotheses fail (z0 a location
/// of h, or the rho threshold exceeded) are skipped, not failed.
TrialRecord check_corollary1(Complex z0, int k, double R, const RationalFunction& h,
                             double tol);

enum class MatchMode { exact, at_least };

/// Assignment of found roots to predicted cluster centers.
struct MatchReport {
    bool matched = false;
    std::vector<int> assigned_counts;              // aligned with predicted
    std::vector<std::pair<Complex, int>> unassigned;
    double min_assigned_slack = 0.0;               // (eps - dist)/eps, or +inf
};

/// Assigns every found root to the unique predicted center within eps.
/// Passes when each center receives exactly (or at least) its predicted
/// multiplicity. Centers must be pairwise separated by more than 2*eps
/// (OverlappingCentersError otherwise); unassigned roots are reported but do
/// not fail the match.
MatchReport match_clusters(const std::vector<std::pair<Complex, int>>& predicted,
                           const RootResult& found, double eps, MatchMode mode);

/// Items checked: each critical point of g reproduced exactly (with
/// multiplicity) within eps in g*h, no critical point of g*h within eps of a
/// zero or pole of g, and no other critical point of g*h inside the R-ball.
TrialRecord check_theorem2(const RationalFunction& g, double R, double eps,
                           const RationalFunction& h, double tol,
                           std::uint32_t samples_per_circle = kDefaultSamplesPerCircle);

/// Polynomial-case check: every critical point of p keeps at least its
/// multiplicity within eps in p*h, and exactly n-1 critical points of p*h
/// lie in the R-ball. Zeros must lie strictly inside the unit disk
/// (ZeroOutsideUnitDiskError).
TrialRecord check_theorem3(const std::vector<std::pair<Complex, int>>& p_zeros, double R,
                           double eps, const RationalFunction& h, double tol);

/// At the computed power threshold n, the critical points of g*h^n must
/// reproduce h's critical points with multiplicity and place exactly one
/// next to each zero/pole of g; the finite total plus the deficiency at
/// infinity must equal k-1.
TrialRecord check_theorem4(const RationalFunction& g, const RationalFunction& h, double eps,
                           double tol,
                           std::uint32_t samples_per_circle = kDefaultSamplesPerCircle);

/// Knobs shared by the suites; NaN means the per-theorem default (R = 3 for
/// thm2, R = 2 for thm3).
struct SuiteParams {
    double R = std::numeric_limits<double>::quiet_NaN();
    double eps = std::numeric_limits<double>::quiet_NaN();
    double tol = 1e-9;
    std::uint32_t samples = kDefaultSamplesPerCircle;
};

/// Runs the per-theorem check over a seeded ensemble, drawing the auxiliary
/// data (test point, far factor, power threshold inputs) per trial.
/// Deterministic given the seed; oracle non-convergence marks a trial
/// inconclusive rather than failed.
VerificationReport run_suite(TheoremId theorem, const EnsembleConfig& cfg,
                             const SuiteParams& params = {});

} // namespace rfcrit

#endif
