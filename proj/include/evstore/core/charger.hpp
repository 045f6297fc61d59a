#pragma once

#include <cstdint>
#include <string>

namespace evstore {

/// One charger registration, the unit of storage in every engine.
struct ChargerRecord {
    std::int64_t id = 0; // sequential, starting at 1
    std::string name;
    std::string address;
    double latitude = 0.0;  // degrees, [-90, 90]
    double longitude = 0.0; // degrees, [-180, 180]
    std::string type;       // "level1" or "level2"

    bool operator==(const ChargerRecord&) const = default;
};

/// Throws InvalidValue when a field is out of its domain.
void validate(const ChargerRecord& record);

} // namespace evstore
