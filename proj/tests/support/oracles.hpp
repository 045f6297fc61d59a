#pragma once

// Independent reference implementations used only to verify the library.
// They deliberately share no code with the implementation paths they check.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace evstore::test {

/// OLS by plain Gaussian elimination on the normal equations, written
/// without Eigen. Returns {beta..., se..., rss}.
struct OracleFit {
    std::vector<double> beta; // intercept first
    std::vector<double> se;
    double rss = 0.0;
};

inline OracleFit gauss_ols(const std::vector<double>& y,
                           const std::vector<std::vector<double>>& predictor_columns) {
    const std::size_t m = y.size();
    const std::size_t p = predictor_columns.size() + 1;
    // design matrix rows
    std::vector<std::vector<double>> X(m, std::vector<double>(p, 1.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 1; j < p; ++j) X[i][j] = predictor_columns[j - 1][i];
    }
    // normal equations A = XtX, b = Xty
    std::vector<std::vector<double>> A(p, std::vector<double>(p, 0.0));
    std::vector<double> b(p, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            b[j] += X[i][j] * y[i];
            for (std::size_t k = 0; k < p; ++k) A[j][k] += X[i][j] * X[i][k];
        }
    }
    // invert A by Gauss-Jordan with partial pivoting
    std::vector<std::vector<double>> inv(p, std::vector<double>(p, 0.0));
    for (std::size_t i = 0; i < p; ++i) inv[i][i] = 1.0;
    auto work = A;
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < p; ++row) {
            if (std::fabs(work[row][col]) > std::fabs(work[pivot][col])) pivot = row;
        }
        std::swap(work[col], work[pivot]);
        std::swap(inv[col], inv[pivot]);
        const double d = work[col][col];
        for (std::size_t k = 0; k < p; ++k) {
            work[col][k] /= d;
            inv[col][k] /= d;
        }
        for (std::size_t row = 0; row < p; ++row) {
            if (row == col) continue;
            const double f = work[row][col];
            for (std::size_t k = 0; k < p; ++k) {
                work[row][k] -= f * work[col][k];
                inv[row][k] -= f * inv[col][k];
            }
        }
    }
    OracleFit fit;
    fit.beta.assign(p, 0.0);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t k = 0; k < p; ++k) fit.beta[j] += inv[j][k] * b[k];
    }
    for (std::size_t i = 0; i < m; ++i) {
        double pred = 0.0;
        for (std::size_t j = 0; j < p; ++j) pred += X[i][j] * fit.beta[j];
        fit.rss += (y[i] - pred) * (y[i] - pred);
    }
    const double sigma2 = fit.rss / static_cast<double>(m - p);
    fit.se.assign(p, 0.0);
    for (std::size_t j = 0; j < p; ++j) fit.se[j] = std::sqrt(sigma2 * inv[j][j]);
    return fit;
}

/// Geohash by explicit bit strings: build the interleaved bit sequence one
/// character at a time, deciding each bit by interval halving on decimal
/// midpoints. Independent of the library's index-based construction.
inline std::string oracle_geohash(double lat, double lon, int precision) {
    double lat_lo = -90.0, lat_hi = 90.0, lon_lo = -180.0, lon_hi = 180.0;
    bool lon_turn = true;
    std::string hash;
    int bits = 0, value = 0;
    const std::string alphabet = "0123456789bcdefghjkmnpqrstuvwxyz";
    while (static_cast<int>(hash.size()) < precision) {
        double& lo = lon_turn ? lon_lo : lat_lo;
        double& hi = lon_turn ? lon_hi : lat_hi;
        const double x = lon_turn ? lon : lat;
        const double mid = (lo + hi) / 2.0;
        value <<= 1;
        if (x >= mid) {
            value |= 1;
            lo = mid;
        } else {
            hi = mid;
        }
        lon_turn = !lon_turn;
        if (++bits == 5) {
            hash.push_back(alphabet[static_cast<std::size_t>(value)]);
            bits = 0;
            value = 0;
        }
    }
    return hash;
}

/// Brute-force prefix cover: enumerate every cell at the precision and
/// keep those whose half-open cell area intersects the closed box. The
/// top cell of each axis also includes its upper edge.
inline std::vector<std::string> oracle_cover(double lat_min, double lat_max, double long_min,
                                             double long_max, int precision) {
    const int total_bits = 5 * precision;
    const int nlat = total_bits / 2;
    const int nlon = (total_bits + 1) / 2;
    const std::uint64_t lat_cells = 1ULL << nlat;
    const std::uint64_t lon_cells = 1ULL << nlon;
    std::vector<std::string> out;
    for (std::uint64_t la = 0; la < lat_cells; ++la) {
        // exact cell bounds by repeated halving
        double lat_lo = -90.0, lat_hi = 90.0;
        for (int b = nlat - 1; b >= 0; --b) {
            const double mid = (lat_lo + lat_hi) / 2.0;
            if ((la >> b) & 1) lat_lo = mid; else lat_hi = mid;
        }
        const bool lat_top = la == lat_cells - 1;
        const bool lat_ok = lat_lo <= lat_max && (lat_min < lat_hi || (lat_top && lat_min <= lat_hi));
        if (!lat_ok) continue;
        for (std::uint64_t lo = 0; lo < lon_cells; ++lo) {
            double lon_lo = -180.0, lon_hi = 180.0;
            for (int b = nlon - 1; b >= 0; --b) {
                const double mid = (lon_lo + lon_hi) / 2.0;
                if ((lo >> b) & 1) lon_lo = mid; else lon_hi = mid;
            }
            const bool lon_top = lo == lon_cells - 1;
            const bool lon_ok =
                lon_lo <= long_max && (long_min < lon_hi || (lon_top && long_min <= lon_hi));
            if (!lon_ok) continue;
            // center of the cell encodes to exactly this cell
            const double clat = (lat_lo + lat_hi) / 2.0;
            const double clon = (lon_lo + lon_hi) / 2.0;
            out.push_back(oracle_geohash(clat, clon, precision));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace evstore::test
