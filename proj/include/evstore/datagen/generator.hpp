#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "evstore/core/charger.hpp"
#include "evstore/core/document.hpp"

namespace evstore::datagen {

/// Mock-data distribution: every field cycles among a small set of levels.
/// The defaults put exactly one latitude level in [47.5, 48.0] and exactly
/// one longitude level in [-122.5, -122.1], so the canonical four-field
/// query matches with probability 1/250.
struct GenSpec {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<double> lat_levels = {43.19, 44.3675, 45.545, 46.7225, 47.9};
    std::vector<double> long_levels = {-124.9, -123.7, -122.5, -121.3, -120.1};
    std::vector<std::string> names = {"Howard", "Gomez", "Singh", "Shipman", "Durnin"};
    std::vector<std::string> streets = {"Cedar Ct", "118th Ave", "119th Ave", "Maple Hill Ln"};
    std::pair<std::int64_t, std::int64_t> house_range = {10000, 11900};
    std::vector<std::string> types = {"level1", "level2"};
    // Draw coordinates continuously over the level span instead of from
    // the discrete levels.
    bool continuous_coords = false;
    // When set, documents gain a "geohash" field at this precision.
    std::optional<int> geohash_precision;

    void validate() const; // throws InvalidValue
};

/// Exactly n records, ids 1..n, every non-id field drawn from its own
/// SplitMix64 stream. Same spec, same bits, on every platform.
std::vector<ChargerRecord> generate(const GenSpec& spec);

/// "{id}_{address with all whitespace removed}".
std::string derive_key(const ChargerRecord& record);

Document to_document(const ChargerRecord& record,
                     std::optional<int> geohash_precision = std::nullopt);
std::vector<Document> to_documents(std::span<const ChargerRecord> records,
                                   std::optional<int> geohash_precision = std::nullopt);

/// Dataset file header: records the generator name, seed and full spec.
nlohmann::ordered_json dataset_header(const GenSpec& spec);

} // namespace evstore::datagen
