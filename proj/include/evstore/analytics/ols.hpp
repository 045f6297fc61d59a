#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace evstore::analytics {

/// An ordinary-least-squares fit with coefficient standard errors:
/// SE(beta_j) = sqrt(sigma^2 * [(X^T X)^-1]_jj), sigma^2 = RSS / (m - p).
struct RegressionFit {
    double intercept = 0.0;
    double intercept_se = 0.0;
    std::vector<double> coefficients;   // one per predictor
    std::vector<double> coefficient_se; // one per predictor
    std::vector<std::string> predictor_names;
    double r_squared = 0.0;
    double rss = 0.0;
    std::size_t m = 0; // samples
    std::size_t p = 0; // parameters, predictors + intercept
};

/// predictors is column-major: predictors[j][i] is predictor j of sample i.
/// Solved through the normal equations with a full-pivot decomposition.
/// Throws TooFewSamples (m <= p) and RankDeficient.
RegressionFit ols_fit(const std::vector<double>& response,
                      const std::vector<std::vector<double>>& predictors,
                      std::vector<std::string> predictor_names = {});

/// Linear evaluation of a fit. Throws ArityMismatch.
double predict(const RegressionFit& fit, const std::vector<double>& predictors);

} // namespace evstore::analytics
