#include "evstore/analytics/ols.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "evstore/core/error.hpp"

namespace evstore::analytics {

RegressionFit ols_fit(const std::vector<double>& response,
                      const std::vector<std::vector<double>>& predictors,
                      std::vector<std::string> predictor_names) {
    const std::size_t m = response.size();
    const std::size_t k = predictors.size();
    const std::size_t p = k + 1;
    if (m == 0) raise(Errc::empty_input, "no samples to fit");
    for (const auto& column : predictors) {
        if (column.size() != m) {
            raise(Errc::arity_mismatch, "predictor column length differs from response length");
        }
    }
    if (m <= p) {
        raise(Errc::too_few_samples, "need more samples (" + std::to_string(m) +
                                         ") than parameters (" + std::to_string(p) + ")");
    }

    Eigen::MatrixXd X(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(p));
    Eigen::VectorXd y(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
        X(static_cast<Eigen::Index>(i), 0) = 1.0;
        for (std::size_t j = 0; j < k; ++j) {
            X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j + 1)) = predictors[j][i];
        }
        y(static_cast<Eigen::Index>(i)) = response[i];
    }

    const Eigen::MatrixXd xtx = X.transpose() * X;
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(xtx);
    if (lu.rank() < static_cast<Eigen::Index>(p)) {
        raise(Errc::rank_deficient, "design matrix is rank deficient");
    }
    const Eigen::VectorXd beta = lu.solve(X.transpose() * y);
    const Eigen::VectorXd residuals = y - X * beta;
    const double rss = residuals.squaredNorm();
    const double sigma2 = rss / static_cast<double>(m - p);
    const Eigen::MatrixXd xtx_inv = lu.inverse();

    RegressionFit fit;
    fit.intercept = beta(0);
    fit.intercept_se = std::sqrt(sigma2 * xtx_inv(0, 0));
    fit.coefficients.resize(k);
    fit.coefficient_se.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        fit.coefficients[j] = beta(static_cast<Eigen::Index>(j + 1));
        fit.coefficient_se[j] = std::sqrt(
            sigma2 * xtx_inv(static_cast<Eigen::Index>(j + 1), static_cast<Eigen::Index>(j + 1)));
    }
    fit.predictor_names = std::move(predictor_names);
    if (fit.predictor_names.empty()) {
        for (std::size_t j = 0; j < k; ++j) fit.predictor_names.push_back("x" + std::to_string(j));
    }
    fit.rss = rss;
    const double mean = y.mean();
    const double tss = (y.array() - mean).square().sum();
    fit.r_squared = tss > 0.0 ? 1.0 - rss / tss : 1.0;
    fit.m = m;
    fit.p = p;
    return fit;
}

double predict(const RegressionFit& fit, const std::vector<double>& predictors) {
    if (predictors.size() != fit.coefficients.size()) {
        raise(Errc::arity_mismatch, "fit has " + std::to_string(fit.coefficients.size()) +
                                        " predictors, got " + std::to_string(predictors.size()));
    }
    double value = fit.intercept;
    for (std::size_t j = 0; j < predictors.size(); ++j) {
        value += fit.coefficients[j] * predictors[j];
    }
    return value;
}

} // namespace evstore::analytics
