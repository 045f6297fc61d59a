#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "evstore/core/condition.hpp"

namespace evstore::geohash {

inline constexpr std::string_view kAlphabet = "0123456789bcdefghjkmnpqrstuvwxyz";
inline constexpr int kMaxPrecision = 12;

/// A closed latitude/longitude bounding box.
struct GeoBox {
    double lat_min = -90.0;
    double lat_max = 90.0;
    double long_min = -180.0;
    double long_max = 180.0;

    bool contains(double lat, double lon) const {
        return lat >= lat_min && lat <= lat_max && lon >= long_min && lon <= long_max;
    }

    void validate() const; // throws OutOfBounds
};

/// Standard base-32 geohash: interval-halving bits alternating longitude
/// then latitude, five bits per character. Lexicographic order of
/// equal-length hashes follows the Z-order of their cells.
std::string encode(double lat, double lon, int precision);

/// The exact interval box a hash denotes; "" is the whole world.
GeoBox decode(std::string_view hash);

/// The minimal set of precision-length prefixes whose cells jointly cover
/// the box. Throws PrecisionTooFine when more than max_prefixes cells
/// would be needed.
std::vector<std::string> cover(const GeoBox& box, int precision,
                               std::size_t max_prefixes = 1024);

/// Rewrites a bounding-box search as single-field range queries over a
/// "geohash" document field: one QuerySpec per maximal run of adjacent
/// prefixes. The union of the results is a superset of the box; exact
/// membership still needs a final filter.
std::vector<QuerySpec> rewrite(const GeoBox& box, int precision,
                               std::size_t max_prefixes = 1024,
                               const std::string& field = "geohash");

} // namespace evstore::geohash
