#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pwi/pwi.hpp"

namespace pwi {

// Average ranks (ties get the mean of the positions they occupy), 1-based.
std::vector<double> average_ranks(std::span<const double> values);

// Spearman rank correlation: Pearson correlation of average ranks.
// Throws std::invalid_argument on length mismatch, n < 2, or constant input.
double spearman(std::span<const double> x, std::span<const double> y);

// Paper-count thresholds used for the validation sweep.
inline constexpr std::array<std::size_t, 6> kDefaultThresholds{1, 10, 20, 30, 40, 50};

struct CorrelationRow {
    std::size_t threshold = 0;
    std::optional<double> rho; // absent when too few authors or constant values
    std::size_t n_authors = 0;
};

struct CorrelationReport {
    std::vector<CorrelationRow> rows;
    std::size_t joined_authors = 0;  // PWI authors that have an external score
    std::size_t missing_scores = 0;  // PWI authors dropped for lack of a score
};

// For each threshold t: correlate pwi with the external score over authors
// having n_papers >= t and a score entry. Per-threshold failures leave rho
// absent, never abort the sweep. Thresholds must be non-empty and ascending.
CorrelationReport threshold_sweep(std::span<const PwiRow> rows,
                                  const std::map<std::string, double>& scores,
                                  std::span<const std::size_t> thresholds);

struct RegressionReport {
    std::vector<std::string> predictor_names;
    double intercept = 0.0;
    std::vector<double> coefficients;
    std::vector<double> betas;           // slope scaled by sd(x)/sd(y)
    std::vector<double> semipartial_r2;  // increment in R^2 from adding the predictor last
    double r2 = 0.0;
    double f_statistic = 0.0;
    std::size_t n = 0;
};

// Ordinary least squares of y on the named predictor columns (intercept
// always included). Throws std::invalid_argument when n <= predictors + 1 or
// columns mismatch in length, and names the offending columns on rank
// deficiency.
RegressionReport ols_regress(std::span<const double> y,
                             const std::vector<std::pair<std::string, std::vector<double>>>& predictors);

// PWI regressed on number of papers, number of co-authors, and awardee flag.
RegressionReport regress_pwi_drivers(std::span<const PwiRow> rows);

struct EcdfPoint {
    double value = 0.0;
    double cum_prob = 0.0;
};

// Empirical CDF: one point per distinct value, carrying the cumulative share.
std::vector<EcdfPoint> ecdf(std::vector<double> values);

struct DistributionExport {
    std::vector<EcdfPoint> laureates;
    std::vector<EcdfPoint> non_laureates;
};

// ECDF of pwi split by laureate status. An empty group yields an empty series.
DistributionExport cumulative_distribution(std::span<const PwiRow> rows);

} // namespace pwi
