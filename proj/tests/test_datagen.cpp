#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "evstore/core/error.hpp"
#include "evstore/datagen/generator.hpp"

using namespace evstore;
using datagen::GenSpec;

TEST_CASE("ids are sequential from one") {
    GenSpec spec;
    spec.n = 10;
    spec.seed = 42;
    const auto records = datagen::generate(spec);
    REQUIRE(records.size() == 10);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].id == static_cast<std::int64_t>(i + 1));
        CHECK_NOTHROW(validate(records[i]));
    }
}

TEST_CASE("fixed seed reproduces frozen golden records") {
    // computed with an independent splitmix64 implementation
    GenSpec spec;
    spec.n = 4;
    spec.seed = 42;
    const auto records = datagen::generate(spec);
    REQUIRE(records.size() == 4);

    CHECK(records[0].name == "Gomez");
    CHECK(records[0].address == "11652 Cedar Ct");
    CHECK(records[0].latitude == 47.9);
    CHECK(records[0].longitude == -124.9);
    CHECK(records[0].type == "level2");

    CHECK(records[1].name == "Gomez");
    CHECK(records[1].address == "10260 Cedar Ct");
    CHECK(records[1].latitude == 43.19);
    CHECK(records[1].longitude == -121.3);
    CHECK(records[1].type == "level2");

    CHECK(records[2].name == "Durnin");
    CHECK(records[2].address == "10996 118th Ave");
    CHECK(records[2].latitude == 43.19);
    CHECK(records[2].longitude == -120.1);

    CHECK(records[3].name == "Shipman");
    CHECK(records[3].address == "11442 119th Ave");
    CHECK(records[3].latitude == 45.545);
    CHECK(records[3].longitude == -123.7);
}

TEST_CASE("regeneration is bit-identical") {
    GenSpec spec;
    spec.n = 1000;
    spec.seed = 9001;
    const auto a = datagen::generate(spec);
    const auto b = datagen::generate(spec);
    CHECK(a == b);

    spec.seed = 9002;
    const auto c = datagen::generate(spec);
    CHECK(a != c);
}

TEST_CASE("field distributions stay within five sigma at n = 10^5") {
    GenSpec spec;
    spec.n = 100'000;
    spec.seed = 1;
    const auto records = datagen::generate(spec);

    std::map<std::string, std::size_t> names;
    std::map<std::string, std::size_t> types;
    std::size_t q_star_matches = 0;
    for (const auto& r : records) {
        ++names[r.name];
        ++types[r.type];
        if (r.name == "Howard" && r.latitude >= 47.5 && r.latitude <= 48.0 &&
            r.longitude >= -122.5 && r.longitude <= -122.1 && r.type == "level2") {
            ++q_star_matches;
        }
    }
    // names: mean n/5 = 20000, sigma = sqrt(n * 1/5 * 4/5) ~ 126.5
    for (const auto& [name, count] : names) {
        CHECK(count > 20000 - 633);
        CHECK(count < 20000 + 633);
    }
    CHECK(names.size() == 5);
    // types: mean n/2 = 50000, sigma ~ 158
    for (const auto& [type, count] : types) {
        CHECK(count > 50000 - 791);
        CHECK(count < 50000 + 791);
    }
    CHECK(types.size() == 2);
    // canonical query: p = 1/250, mean 400, sigma ~ 20
    CHECK(q_star_matches > 300);
    CHECK(q_star_matches < 500);
}

TEST_CASE("exactly one default level lies inside each canonical range") {
    const GenSpec spec;
    int lat_in = 0;
    for (const double v : spec.lat_levels) {
        if (v >= 47.5 && v <= 48.0) ++lat_in;
    }
    CHECK(lat_in == 1);
    int long_in = 0;
    for (const double v : spec.long_levels) {
        if (v >= -122.5 && v <= -122.1) ++long_in;
    }
    CHECK(long_in == 1);
}

TEST_CASE("key derivation strips whitespace") {
    ChargerRecord rec;
    rec.id = 1;
    rec.address = "11899 118th Ave";
    CHECK(datagen::derive_key(rec) == "1_11899118thAve");

    rec.id = 7;
    rec.address = "10000 Cedar Ct";
    CHECK(datagen::derive_key(rec) == "7_10000CedarCt");

    rec.id = 1;
    rec.address = "";
    CHECK(datagen::derive_key(rec) == "1_");
}

TEST_CASE("document conversion carries all fields and optional geohash") {
    GenSpec spec;
    spec.n = 3;
    spec.seed = 5;
    const auto records = datagen::generate(spec);
    const auto plain = datagen::to_documents(records);
    REQUIRE(plain.size() == 3);
    CHECK(plain[0].key == datagen::derive_key(records[0]));
    CHECK_FALSE(plain[0].has("geohash"));
    REQUIRE(plain[0].fields.size() == 6);
    CHECK(plain[0].fields[0].first == "id");

    const auto hashed = datagen::to_documents(records, 6);
    CHECK(hashed[0].has("geohash"));
    CHECK(std::get<std::string>(*hashed[0].find("geohash")).size() == 6);
}

TEST_CASE("continuous mode draws inside the level span") {
    GenSpec spec;
    spec.n = 500;
    spec.seed = 3;
    spec.continuous_coords = true;
    const auto records = datagen::generate(spec);
    int on_level = 0;
    for (const auto& r : records) {
        CHECK(r.latitude >= 43.19);
        CHECK(r.latitude <= 47.9);
        CHECK(r.longitude >= -124.9);
        CHECK(r.longitude <= -120.1);
        if (r.latitude == 47.9 || r.latitude == 43.19) ++on_level;
    }
    CHECK(on_level < 5); // continuous draws essentially never hit a level
}

TEST_CASE("invalid specs are rejected") {
    GenSpec spec;
    spec.names.clear();
    CHECK_THROWS_AS(datagen::generate(spec), Error);

    GenSpec degenerate;
    degenerate.house_range = {10, 10};
    CHECK_THROWS_AS(datagen::generate(degenerate), Error);

    GenSpec bad_precision;
    bad_precision.geohash_precision = 13;
    CHECK_THROWS_AS(datagen::generate(bad_precision), Error);
}

TEST_CASE("dataset header records the generator and seed") {
    GenSpec spec;
    spec.n = 7;
    spec.seed = 99;
    const auto header = datagen::dataset_header(spec);
    CHECK(header.at("rng") == "splitmix64");
    CHECK(header.at("seed") == 99);
    CHECK(header.at("count") == 7);
    CHECK_FALSE(header.contains("_key"));
}
