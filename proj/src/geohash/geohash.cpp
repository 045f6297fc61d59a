#include "evstore/geohash/geohash.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>

#include "evstore/core/error.hpp"

namespace evstore::geohash {

namespace {

constexpr int kBitsPerChar = 5;

int alphabet_index(char c) {
    const auto at = kAlphabet.find(c);
    if (at == std::string_view::npos) {
        raise(Errc::bad_character, std::string("invalid geohash character '") + c + "'");
    }
    return static_cast<int>(at);
}

void check_precision(int precision) {
    if (precision < 1 || precision > kMaxPrecision) {
        raise(Errc::bad_precision,
              "precision must be in 1.." + std::to_string(kMaxPrecision));
    }
}

int lat_bits(int precision) { return kBitsPerChar * precision / 2; }
int long_bits(int precision) { return (kBitsPerChar * precision + 1) / 2; }

/// Cell index of a coordinate along one axis, by the same interval-halving
/// rule encode uses (x >= mid goes to the upper half), so the arithmetic
/// is exact and boundary points land in the upper cell.
std::uint64_t cell_index(double x, double lo, double hi, int bits) {
    std::uint64_t idx = 0;
    for (int b = 0; b < bits; ++b) {
        const double mid = (lo + hi) / 2.0;
        idx <<= 1;
        if (x >= mid) {
            idx |= 1;
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return idx;
}

/// Interleaves longitude (even positions, starting first) and latitude
/// bits into a precision-length hash.
std::string hash_from_cells(std::uint64_t lon_idx, std::uint64_t lat_idx, int precision) {
    const int nlon = long_bits(precision);
    const int nlat = lat_bits(precision);
    std::string out;
    out.reserve(static_cast<std::size_t>(precision));
    int li = nlon, ai = nlat; // bits left to emit, most significant first
    int acc = 0, nacc = 0;
    for (int pos = 0; pos < kBitsPerChar * precision; ++pos) {
        int bit;
        if (pos % 2 == 0) {
            --li;
            bit = static_cast<int>((lon_idx >> li) & 1);
        } else {
            --ai;
            bit = static_cast<int>((lat_idx >> ai) & 1);
        }
        acc = (acc << 1) | bit;
        if (++nacc == kBitsPerChar) {
            out.push_back(kAlphabet[static_cast<std::size_t>(acc)]);
            acc = 0;
            nacc = 0;
        }
    }
    return out;
}

std::optional<std::string> successor(std::string prefix) {
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        const int idx = alphabet_index(*it);
        if (idx + 1 < static_cast<int>(kAlphabet.size())) {
            *it = kAlphabet[static_cast<std::size_t>(idx + 1)];
            return prefix;
        }
        *it = kAlphabet[0]; // carry
    }
    return std::nullopt; // all 'z': no successor at this length
}

} // namespace

void GeoBox::validate() const {
    if (lat_min > lat_max || long_min > long_max) {
        raise(Errc::out_of_bounds, "box min exceeds max");
    }
    if (lat_min < -90.0 || lat_max > 90.0 || long_min < -180.0 || long_max > 180.0) {
        raise(Errc::out_of_bounds, "box outside world bounds");
    }
}

std::string encode(double lat, double lon, int precision) {
    check_precision(precision);
    if (lat < -90.0 || lat > 90.0 || lon < -180.0 || lon > 180.0) {
        raise(Errc::out_of_bounds, "coordinates outside world bounds");
    }
    const std::uint64_t lon_idx = cell_index(lon, -180.0, 180.0, long_bits(precision));
    const std::uint64_t lat_idx = cell_index(lat, -90.0, 90.0, lat_bits(precision));
    return hash_from_cells(lon_idx, lat_idx, precision);
}

GeoBox decode(std::string_view hash) {
    if (hash.size() > static_cast<std::size_t>(kMaxPrecision)) {
        raise(Errc::bad_precision, "hash longer than max precision");
    }
    GeoBox box;
    bool lon_turn = true;
    for (const char c : hash) {
        const int idx = alphabet_index(c);
        for (int b = kBitsPerChar - 1; b >= 0; --b) {
            const int bit = (idx >> b) & 1;
            double& lo = lon_turn ? box.long_min : box.lat_min;
            double& hi = lon_turn ? box.long_max : box.lat_max;
            const double mid = (lo + hi) / 2.0;
            if (bit) {
                lo = mid;
            } else {
                hi = mid;
            }
            lon_turn = !lon_turn;
        }
    }
    return box;
}

std::vector<std::string> cover(const GeoBox& box, int precision, std::size_t max_prefixes) {
    check_precision(precision);
    box.validate();
    const int nlat = lat_bits(precision);
    const int nlon = long_bits(precision);
    const std::uint64_t lat_lo = cell_index(box.lat_min, -90.0, 90.0, nlat);
    const std::uint64_t lat_hi = cell_index(box.lat_max, -90.0, 90.0, nlat);
    const std::uint64_t lon_lo = cell_index(box.long_min, -180.0, 180.0, nlon);
    const std::uint64_t lon_hi = cell_index(box.long_max, -180.0, 180.0, nlon);
    const std::uint64_t count = (lat_hi - lat_lo + 1) * (lon_hi - lon_lo + 1);
    if (count > max_prefixes) {
        raise(Errc::precision_too_fine,
              "box needs " + std::to_string(count) + " prefixes at precision " +
                  std::to_string(precision) + " (limit " + std::to_string(max_prefixes) + ")");
    }
    std::vector<std::string> prefixes;
    prefixes.reserve(count);
    for (std::uint64_t la = lat_lo; la <= lat_hi; ++la) {
        for (std::uint64_t lo = lon_lo; lo <= lon_hi; ++lo) {
            prefixes.push_back(hash_from_cells(lo, la, precision));
        }
    }
    std::sort(prefixes.begin(), prefixes.end());
    return prefixes;
}

std::vector<QuerySpec> rewrite(const GeoBox& box, int precision, std::size_t max_prefixes,
                               const std::string& field) {
    const std::vector<std::string> prefixes = cover(box, precision, max_prefixes);
    std::vector<QuerySpec> specs;
    std::size_t run_start = 0;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        const bool run_ends = i + 1 == prefixes.size() ||
                              successor(prefixes[i]) != std::optional(prefixes[i + 1]);
        if (!run_ends) continue;
        QuerySpec spec;
        spec.conditions.push_back({field, Op::ge, make_text(prefixes[run_start])});
        if (auto succ = successor(prefixes[i])) {
            spec.conditions.push_back({field, Op::lt, make_text(*succ)});
        }
        // no successor: the run ends at the top of the key space, GE alone
        specs.push_back(std::move(spec));
        run_start = i + 1;
    }
    return specs;
}

} // namespace evstore::geohash
