#pragma once

#include <vector>

#include "evstore/core/condition.hpp"
#include "evstore/core/document.hpp"

namespace evstore::test {

// Three hand-written chargers used across the suites.
inline Document f3_d1() {
    Document d;
    d.key = "1_11899118thAve";
    d.fields = {{"id", make_integer(1)},
                {"name", make_text("Howard")},
                {"address", make_text("11899 118th Ave")},
                {"latitude", make_number(47.9)},
                {"longitude", make_number(-122.5)},
                {"type", make_text("level2")}};
    return d;
}

inline Document f3_d2() {
    Document d;
    d.key = "2_10000CedarCt";
    d.fields = {{"id", make_integer(2)},
                {"name", make_text("Gomez")},
                {"address", make_text("10000 Cedar Ct")},
                {"latitude", make_number(43.19)},
                {"longitude", make_number(-124.9)},
                {"type", make_text("level1")}};
    return d;
}

inline Document f3_d3() {
    Document d;
    d.key = "3_11000119thAve";
    d.fields = {{"id", make_integer(3)},
                {"name", make_text("Howard")},
                {"address", make_text("11000 119th Ave")},
                {"latitude", make_number(47.9)},
                {"longitude", make_number(-120.1)},
                {"type", make_text("level2")}};
    return d;
}

inline std::vector<Document> f3() { return {f3_d1(), f3_d2(), f3_d3()}; }

// The canonical query: two equalities plus two inclusive ranges.
inline std::vector<Condition> q_star() {
    return {
        {"name", Op::eq, make_text("Howard")},
        {"latitude", Op::ge, make_number(47.5)},
        {"latitude", Op::le, make_number(48.0)},
        {"longitude", Op::ge, make_number(-122.5)},
        {"longitude", Op::le, make_number(-122.1)},
        {"type", Op::eq, make_text("level2")},
    };
}

inline std::vector<std::string> keys_of(const std::vector<Document>& docs) {
    std::vector<std::string> keys;
    keys.reserve(docs.size());
    for (const auto& d : docs) keys.push_back(d.key);
    std::sort(keys.begin(), keys.end());
    return keys;
}

// charger identity across engines: rows and documents key differently
inline std::vector<std::int64_t> ids_of(const std::vector<Document>& docs) {
    std::vector<std::int64_t> ids;
    ids.reserve(docs.size());
    for (const auto& d : docs) ids.push_back(std::get<std::int64_t>(*d.find("id")));
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace evstore::test
