#include "evstore/datagen/generator.hpp"

#include <cctype>

#include "evstore/core/error.hpp"
#include "evstore/core/rng.hpp"
#include "evstore/geohash/geohash.hpp"

namespace evstore::datagen {

void GenSpec::validate() const {
    if (lat_levels.empty() || long_levels.empty() || names.empty() || streets.empty() ||
        types.empty()) {
        raise(Errc::invalid_value, "generator level lists must be non-empty");
    }
    if (house_range.first >= house_range.second) {
        raise(Errc::invalid_value, "house number range is degenerate");
    }
    if (geohash_precision && (*geohash_precision < 1 || *geohash_precision > 12)) {
        raise(Errc::bad_precision, "geohash precision must be in 1..12");
    }
}

namespace {

SplitMix64 field_stream(const GenSpec& spec, std::string_view field) {
    return SplitMix64(spec.seed ^ fnv1a64(field));
}

} // namespace

std::vector<ChargerRecord> generate(const GenSpec& spec) {
    spec.validate();
    auto name_rng = field_stream(spec, "name");
    auto lat_rng = field_stream(spec, "latitude");
    auto long_rng = field_stream(spec, "longitude");
    auto type_rng = field_stream(spec, "type");
    auto house_rng = field_stream(spec, "house");
    auto street_rng = field_stream(spec, "street");

    const double lat_lo = spec.lat_levels.front();
    const double lat_hi = spec.lat_levels.back();
    const double long_lo = spec.long_levels.front();
    const double long_hi = spec.long_levels.back();
    const auto house_span =
        static_cast<std::uint64_t>(spec.house_range.second - spec.house_range.first + 1);

    std::vector<ChargerRecord> out;
    out.reserve(spec.n);
    for (std::size_t i = 1; i <= spec.n; ++i) {
        ChargerRecord rec;
        rec.id = static_cast<std::int64_t>(i);
        rec.name = spec.names[name_rng.bounded(spec.names.size())];
        if (spec.continuous_coords) {
            rec.latitude = lat_lo + lat_rng.unit() * (lat_hi - lat_lo);
            rec.longitude = long_lo + long_rng.unit() * (long_hi - long_lo);
        } else {
            rec.latitude = spec.lat_levels[lat_rng.bounded(spec.lat_levels.size())];
            rec.longitude = spec.long_levels[long_rng.bounded(spec.long_levels.size())];
        }
        rec.type = spec.types[type_rng.bounded(spec.types.size())];
        const auto house = spec.house_range.first +
                           static_cast<std::int64_t>(house_rng.bounded(house_span));
        rec.address = std::to_string(house) + " " +
                      spec.streets[street_rng.bounded(spec.streets.size())];
        out.push_back(std::move(rec));
    }
    return out;
}

std::string derive_key(const ChargerRecord& record) {
    std::string compact;
    compact.reserve(record.address.size());
    for (const char c : record.address) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    return std::to_string(record.id) + "_" + compact;
}

Document to_document(const ChargerRecord& record, std::optional<int> geohash_precision) {
    Document doc;
    doc.key = derive_key(record);
    doc.fields.emplace_back("id", make_integer(record.id));
    doc.fields.emplace_back("name", make_text(record.name));
    doc.fields.emplace_back("address", make_text(record.address));
    doc.fields.emplace_back("latitude", make_number(record.latitude));
    doc.fields.emplace_back("longitude", make_number(record.longitude));
    doc.fields.emplace_back("type", make_text(record.type));
    if (geohash_precision) {
        doc.fields.emplace_back(
            "geohash",
            make_text(geohash::encode(record.latitude, record.longitude, *geohash_precision)));
    }
    return doc;
}

std::vector<Document> to_documents(std::span<const ChargerRecord> records,
                                   std::optional<int> geohash_precision) {
    std::vector<Document> docs;
    docs.reserve(records.size());
    for (const auto& rec : records) docs.push_back(to_document(rec, geohash_precision));
    return docs;
}

nlohmann::ordered_json dataset_header(const GenSpec& spec) {
    nlohmann::ordered_json h;
    h["dataset"] = "chargers";
    h["count"] = spec.n;
    h["seed"] = spec.seed;
    h["rng"] = "splitmix64";
    h["lat_levels"] = spec.lat_levels;
    h["long_levels"] = spec.long_levels;
    h["names"] = spec.names;
    h["streets"] = spec.streets;
    h["house_range"] = {spec.house_range.first, spec.house_range.second};
    h["types"] = spec.types;
    h["continuous_coords"] = spec.continuous_coords;
    if (spec.geohash_precision) h["geohash_precision"] = *spec.geohash_precision;
    return h;
}

} // namespace evstore::datagen
