#include "evstore/core/charger.hpp"

#include "evstore/core/error.hpp"

namespace evstore {

void validate(const ChargerRecord& record) {
    if (record.id <= 0) raise(Errc::invalid_value, "charger id must be positive");
    if (record.latitude < -90.0 || record.latitude > 90.0) {
        raise(Errc::invalid_value, "latitude out of [-90, 90]");
    }
    if (record.longitude < -180.0 || record.longitude > 180.0) {
        raise(Errc::invalid_value, "longitude out of [-180, 180]");
    }
    if (record.type != "level1" && record.type != "level2") {
        raise(Errc::invalid_value, "charger type must be level1 or level2");
    }
}

} // namespace evstore
