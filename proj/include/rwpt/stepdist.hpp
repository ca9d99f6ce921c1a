#pragma once
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rwpt/geometry.hpp"

namespace rwpt {

struct DistributionSpec {
    enum class Kind { LazySrw, King, CustomTable, TruncatedPowerLaw };

    Kind kind = Kind::LazySrw;
    std::vector<std::pair<Point, double>> table; // custom_table entries
    double exponent = 0;                         // truncated_power_law
    int cutoff = 0;                              // truncated_power_law, >= 1
    double moment_M = 5.0;                       // moment exponent used in error terms

    static DistributionSpec lazy_srw();
    static DistributionSpec king();
    static DistributionSpec custom(std::vector<std::pair<Point, double>> entries);
    static DistributionSpec truncated_power_law(double exponent, int cutoff);

    std::string kind_name() const;
    static std::optional<Kind> kind_from_name(const std::string&);
};

// Validated one-step law. Immutable after construction and shareable across
// threads.
class StepDistribution {
public:
    const std::vector<std::pair<Point, double>>& support() const { return support_; }
    double prob(const Point& p) const;

    double cov_scale() const { return cov_scale_; } // c, with Gamma = cI
    double gamma2() const { return gamma2_; }       // tr Gamma = 2c
    double pi_gamma() const { return pi_gamma_; }   // 2*pi*sqrt(det Gamma) = 2*pi*c
    double max_range() const { return max_range_; } // max |x| over the support

    double moment_M() const { return moment_M_; }
    double beta() const { return (moment_M_ - 4.0) / 2.0; } // M = 4 + 2*beta
    const std::map<double, double>& moments() const { return moments_; }

    bool symmetric() const { return symmetric_; }
    bool isotropic_cov() const { return isotropic_cov_; }
    bool strongly_aperiodic() const { return strongly_aperiodic_; }
    bool bounded_support() const { return true; } // every catalog family is finite

    DistributionSpec::Kind kind() const { return kind_; }
    double plaw_exponent() const { return plaw_exponent_; }
    std::string name() const { return name_; }

private:
    friend StepDistribution build_distribution(const DistributionSpec&);
    std::vector<std::pair<Point, double>> support_;
    std::unordered_map<Point, double, PointHash> lookup_;
    double cov_scale_ = 0, gamma2_ = 0, pi_gamma_ = 0, max_range_ = 0;
    double moment_M_ = 5.0;
    std::map<double, double> moments_;
    bool symmetric_ = false, isotropic_cov_ = false, strongly_aperiodic_ = false;
    DistributionSpec::Kind kind_ = DistributionSpec::Kind::CustomTable;
    double plaw_exponent_ = 0;
    std::string name_;
};

// Rejects specs violating symmetry, Gamma = cI, or normalization.
StepDistribution build_distribution(const DistributionSpec& spec);

// Plain Sum |x|^M p1(x) over the realized support. No family-level checks.
double raw_abs_moment(const StepDistribution& d, double M);

// Spec op: throws DivergentMoment when a truncated_power_law stands in for an
// infinite-range family whose E|X|^M diverges (M >= alpha - 2).
double moment(const StepDistribution& d, double M);

// True iff the support generates Z^2 with no parity obstruction. Implemented
// by iterating support self-sums until the reachable set stabilizes to a full
// box of radius 4*max|support| at consecutive steps (at most 64 iterations).
bool check_strong_aperiodicity(const StepDistribution& d);

struct ConditionAReport {
    bool pass = false;
    bool bounded_shortcircuit = false;
    bool inf_evaluated = false;
    double inf_value = 0;  // inf over n <= |y| < n+s of P^y(one step into D(0,n))
    double threshold = 0;  // c * exp(-beta * s^{1/4})
    double c = 0, beta = 0;
    int n = 0, s = 0;
};

// Eq-1.1-style check. lazy/king/custom shortcircuit on bounded support;
// truncated_power_law is evaluated exhaustively over the annulus ring.
ConditionAReport check_condition_A(const StepDistribution& d, int n, int s,
                                   double c = 0.01, double beta = 1.0);

} // namespace rwpt
