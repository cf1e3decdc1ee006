#include "pwi/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

namespace pwi {

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]])
            ++j;
        // positions i+1 .. j+1 share the mean rank
        const double rank = static_cast<double>(i + 1 + j + 1) / 2.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

namespace {

bool is_constant(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

double pearson(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

} // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("spearman: input lengths differ (" + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()) + ")");
    if (x.size() < 2)
        throw std::invalid_argument("spearman: need at least 2 observations");
    if (is_constant(x) || is_constant(y))
        throw std::invalid_argument("spearman: an input is constant, ranks are undefined");

    const std::vector<double> rx = average_ranks(x);
    const std::vector<double> ry = average_ranks(y);
    return std::clamp(pearson(rx, ry), -1.0, 1.0);
}

CorrelationReport threshold_sweep(std::span<const PwiRow> rows,
                                  const std::map<std::string, double>& scores,
                                  std::span<const std::size_t> thresholds) {
    if (thresholds.empty())
        throw std::invalid_argument("threshold_sweep: no thresholds given");
    if (!std::is_sorted(thresholds.begin(), thresholds.end()))
        throw std::invalid_argument("threshold_sweep: thresholds must be ascending");

    struct Joined {
        double pwi;
        double score;
        std::size_t n_papers;
    };
    std::vector<Joined> joined;
    CorrelationReport report;
    for (const PwiRow& row : rows) {
        auto it = scores.find(row.author);
        if (it == scores.end()) {
            ++report.missing_scores;
            continue;
        }
        joined.push_back({row.pwi, it->second, row.n_papers});
    }
    report.joined_authors = joined.size();

    for (std::size_t threshold : thresholds) {
        std::vector<double> x, y;
        for (const Joined& j : joined) {
            if (j.n_papers >= threshold) {
                x.push_back(j.pwi);
                y.push_back(j.score);
            }
        }
        CorrelationRow row;
        row.threshold = threshold;
        row.n_authors = x.size();
        try {
            row.rho = spearman(x, y);
        } catch (const std::invalid_argument&) {
            row.rho.reset(); // too few authors or constant values at this threshold
        }
        report.rows.push_back(row);
    }
    return report;
}

namespace {

double sample_sd(std::span<const double> v) {
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : v)
        ss += (x - mean) * (x - mean);
    return std::sqrt(ss / (n - 1.0));
}

// R^2 of an OLS fit of y on the given columns (intercept included).
double fit_r2(const Eigen::MatrixXd& design, const Eigen::VectorXd& y, double total_ss) {
    Eigen::VectorXd coef = design.colPivHouseholderQr().solve(y);
    const Eigen::VectorXd residuals = y - design * coef;
    return 1.0 - residuals.squaredNorm() / total_ss;
}

} // namespace

RegressionReport ols_regress(
    std::span<const double> y,
    const std::vector<std::pair<std::string, std::vector<double>>>& predictors) {
    const std::size_t n = y.size();
    const std::size_t k = predictors.size();
    if (k == 0)
        throw std::invalid_argument("ols_regress: no predictors given");
    for (const auto& [name, column] : predictors)
        if (column.size() != n)
            throw std::invalid_argument("ols_regress: column \"" + name + "\" has " +
                                        std::to_string(column.size()) + " rows, expected " +
                                        std::to_string(n));
    if (n <= k + 1)
        throw std::invalid_argument("ols_regress: need more than " + std::to_string(k + 1) +
                                    " observations for " + std::to_string(k) + " predictors");

    Eigen::MatrixXd design(n, k + 1);
    design.col(0).setOnes();
    for (std::size_t j = 0; j < k; ++j)
        design.col(j + 1) = Eigen::Map<const Eigen::VectorXd>(predictors[j].second.data(), n);
    Eigen::Map<const Eigen::VectorXd> yv(y.data(), n);

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (static_cast<std::size_t>(qr.rank()) < k + 1) {
        // The permuted trailing columns are the linearly dependent ones.
        const auto& perm = qr.colsPermutation().indices();
        std::vector<std::string> dependent;
        for (Eigen::Index i = qr.rank(); i < perm.size(); ++i) {
            const Eigen::Index col = perm(i);
            dependent.push_back(col == 0 ? "(intercept)" : predictors[col - 1].first);
        }
        std::sort(dependent.begin(), dependent.end());
        std::string msg = "ols_regress: collinear columns:";
        for (const std::string& name : dependent)
            msg += " " + name;
        throw std::invalid_argument(msg);
    }

    RegressionReport report;
    report.n = n;
    const Eigen::VectorXd coef = qr.solve(yv);
    report.intercept = coef(0);
    report.coefficients.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        report.coefficients[j] = coef(j + 1);
        report.predictor_names.push_back(predictors[j].first);
    }

    const double y_mean = yv.mean();
    const double total_ss = (yv.array() - y_mean).square().sum();
    if (total_ss == 0.0) {
        // Constant response: the fit is the mean, nothing to explain.
        report.r2 = 0.0;
        report.f_statistic = 0.0;
        report.betas.assign(k, 0.0);
        report.semipartial_r2.assign(k, 0.0);
        return report;
    }

    const Eigen::VectorXd residuals = yv - design * coef;
    report.r2 = 1.0 - residuals.squaredNorm() / total_ss;

    const double sd_y = sample_sd(y);
    report.betas.resize(k);
    report.semipartial_r2.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        report.betas[j] = report.coefficients[j] * sample_sd(predictors[j].second) / sd_y;

        Eigen::MatrixXd reduced(n, k); // model without predictor j
        reduced.col(0).setOnes();
        Eigen::Index col = 1;
        for (std::size_t m = 0; m < k; ++m)
            if (m != j)
                reduced.col(col++) = design.col(m + 1);
        report.semipartial_r2[j] = report.r2 - fit_r2(reduced, yv, total_ss);
    }

    const double dk = static_cast<double>(k);
    const double df = static_cast<double>(n - k - 1);
    report.f_statistic = report.r2 >= 1.0 ? std::numeric_limits<double>::infinity()
                                          : (report.r2 / dk) / ((1.0 - report.r2) / df);
    return report;
}

RegressionReport regress_pwi_drivers(std::span<const PwiRow> rows) {
    std::vector<double> y;
    std::vector<double> papers, coauthors, awardee;
    y.reserve(rows.size());
    for (const PwiRow& row : rows) {
        y.push_back(row.pwi);
        papers.push_back(static_cast<double>(row.n_papers));
        coauthors.push_back(static_cast<double>(row.n_coauthors));
        awardee.push_back(row.is_laureate ? 1.0 : 0.0);
    }
    return ols_regress(y, {{"papers", std::move(papers)},
                           {"coauthors", std::move(coauthors)},
                           {"awardee", std::move(awardee)}});
}

std::vector<EcdfPoint> ecdf(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::vector<EcdfPoint> points;
    const std::size_t n = values.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[j + 1] == values[i])
            ++j;
        points.push_back({values[i], static_cast<double>(j + 1) / static_cast<double>(n)});
        i = j + 1;
    }
    return points;
}

DistributionExport cumulative_distribution(std::span<const PwiRow> rows) {
    std::vector<double> laureates, others;
    for (const PwiRow& row : rows)
        (row.is_laureate ? laureates : others).push_back(row.pwi);
    return {ecdf(std::move(laureates)), ecdf(std::move(others))};
}

} // namespace pwi
