#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evstore/core/error.hpp"
#include "evstore/core/rng.hpp"
#include "evstore/datagen/generator.hpp"
#include "evstore/docstore/collection.hpp"
#include "evstore/relstore/store.hpp"
#include "support/fixtures.hpp"

using namespace evstore;
using relstore::ColumnType;
using relstore::RelStore;
using relstore::Schema;
using relstore::Table;

namespace {

Table f3_table() {
    Table table("f3", relstore::charger_schema());
    for (const auto& d : test::f3()) table.insert_row(d);
    return table;
}

} // namespace

TEST_CASE("table creation and schema validation") {
    RelStore store;
    store.create_table("chargers", relstore::charger_schema());
    CHECK_THROWS_AS(store.create_table("chargers", relstore::charger_schema()), Error);

    Schema dup;
    dup.columns = {{"a", ColumnType::text, true}, {"a", ColumnType::text, false}};
    dup.primary_key = "a";
    CHECK_THROWS_AS(Table("t", dup), Error);

    Schema no_pk;
    no_pk.columns = {{"a", ColumnType::text, true}};
    no_pk.primary_key = "b";
    CHECK_THROWS_AS(Table("t", no_pk), Error);

    Schema optional_pk;
    optional_pk.columns = {{"a", ColumnType::integer, false}};
    optional_pk.primary_key = "a";
    CHECK_THROWS_AS(Table("t", optional_pk), Error);
}

TEST_CASE("schema enforcement on insert") {
    Table table("t", relstore::charger_schema());
    CHECK_NOTHROW(table.insert_row(test::f3_d1()));

    SUBCASE("wrong type names the column") {
        auto bad = test::f3_d2();
        bad.set("latitude", make_text("north"));
        try {
            table.insert_row(bad);
            FAIL("expected SchemaViolation");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::schema_violation);
            CHECK(std::string(e.what()).find("latitude") != std::string::npos);
        }
        CHECK(table.size() == 1); // rejected row left the table unchanged
    }

    SUBCASE("missing required column") {
        Document missing = test::f3_d2();
        std::erase_if(missing.fields, [](const auto& f) { return f.first == "type"; });
        try {
            table.insert_row(missing);
            FAIL("expected SchemaViolation");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::schema_violation);
            CHECK(std::string(e.what()).find("type") != std::string::npos);
        }
    }

    SUBCASE("unknown column") {
        auto extra = test::f3_d2();
        extra.set("rating", make_number(4.5));
        CHECK_THROWS_AS(table.insert_row(extra), Error);
    }

    SUBCASE("duplicate primary key") {
        CHECK_THROWS_AS(table.insert_row(test::f3_d1()), Error);
    }

    SUBCASE("integer widens into a number column but not the reverse") {
        auto widened = test::f3_d2();
        widened.set("latitude", make_integer(44));
        CHECK_NOTHROW(table.insert_row(widened));

        auto narrowed = test::f3_d3();
        narrowed.set("id", make_number(3.0));
        CHECK_THROWS_AS(table.insert_row(narrowed), Error);
    }
}

TEST_CASE("select matches the brute-force oracle exactly") {
    const auto table = f3_table();

    SUBCASE("canonical query") {
        const auto result = table.select(test::q_star());
        REQUIRE(result.rows.size() == 1);
        CHECK(result.rows.front().find("id") != nullptr);
        CHECK(std::get<std::int64_t>(*result.rows.front().find("id")) == 1);
        CHECK(result.stats.rows_scanned == 3);
    }
    SUBCASE("primary-key fast path") {
        const auto result = table.select({{"id", Op::eq, make_integer(2)}});
        REQUIRE(result.rows.size() == 1);
        CHECK(std::get<std::string>(*result.rows.front().find("name")) == "Gomez");
        CHECK(result.stats.rows_scanned == 1);
        CHECK(result.stats.docs_examined == 1);
    }
    SUBCASE("unknown column is an error in the schema world") {
        CHECK_THROWS_AS(table.select({{"rating", Op::ge, make_number(3.0)}}), Error);
        try {
            table.select({{"rating", Op::ge, make_number(3.0)}});
        } catch (const Error& e) {
            CHECK(e.code() == Errc::unknown_column);
        }
    }
    SUBCASE("multiple inequality columns are fine here") {
        const auto result = table.select({{"latitude", Op::ge, make_number(47.5)},
                                          {"longitude", Op::le, make_number(-122.1)}});
        REQUIRE(result.rows.size() == 1);
        CHECK(result.rows.front().key == "1");
        CHECK(result.stats.rows_scanned == 3); // full scan, no indexes
    }
}

TEST_CASE("update is atomic") {
    auto table = f3_table();

    table.update_row(make_integer(1), {{"type", make_text("level1")}});
    CHECK(table.select(test::q_star()).rows.empty()); // d1 was the only match

    CHECK_THROWS_AS(table.update_row(make_integer(99), {}), Error);

    // a bad change leaves the row untouched
    const auto before = table.select({{"id", Op::eq, make_integer(2)}}).rows.front();
    CHECK_THROWS_AS(
        table.update_row(make_integer(2), {{"name", make_text("X")},
                                           {"latitude", make_text("x")}}),
        Error);
    const auto after = table.select({{"id", Op::eq, make_integer(2)}}).rows.front();
    CHECK(before == after);
}

TEST_CASE("read_all scans every row") {
    const auto table = f3_table();
    const auto result = table.read_all();
    CHECK(result.rows.size() == 3);
    CHECK(result.stats.rows_scanned == 3);

    Table empty("e", relstore::charger_schema());
    CHECK(empty.read_all().rows.empty());
}

TEST_CASE("full-scan accounting at scale") {
    datagen::GenSpec gen;
    gen.n = 10'000;
    gen.seed = 3;
    Table table("scan", relstore::charger_schema());
    for (const auto& d : datagen::to_documents(datagen::generate(gen))) table.insert_row(d);

    const auto result = table.select(test::q_star());
    CHECK(result.stats.rows_scanned == 10'000);
    const auto pk = table.select({{"id", Op::eq, make_integer(4242)}});
    CHECK(pk.stats.rows_scanned == 1);
    CHECK(pk.rows.size() == 1);
}

TEST_CASE("differential correctness against the brute-force oracle") {
    datagen::GenSpec gen;
    gen.n = 2000;
    gen.seed = 21;
    const auto docs = datagen::to_documents(datagen::generate(gen));
    Table table("diff", relstore::charger_schema());
    for (const auto& d : docs) table.insert_row(d);

    SplitMix64 rng(77);
    const std::vector<std::string> names = {"Howard", "Gomez", "Singh", "Shipman", "Durnin"};
    for (int round = 0; round < 150; ++round) {
        std::vector<Condition> conds;
        if (rng.bounded(2) == 0) {
            const double lo = 43.0 + static_cast<double>(rng.bounded(50)) / 10.0;
            conds.push_back({"latitude", Op::ge, make_number(lo)});
            conds.push_back({"latitude", Op::le, make_number(lo + 1.5)});
        }
        if (rng.bounded(2) == 0) {
            const double lo = -125.0 + static_cast<double>(rng.bounded(50)) / 10.0;
            conds.push_back({"longitude", Op::gt, make_number(lo)});
        }
        if (rng.bounded(2) == 0) {
            conds.push_back({"name", Op::eq, make_text(names[rng.bounded(5)])});
        }
        const auto result = table.select(conds);
        const auto oracle = filter_brute_force(table.read_all().rows, conds);
        CHECK(test::keys_of(result.rows) == test::keys_of(oracle));
    }
}

TEST_CASE("cross-engine equivalence on the canonical query") {
    // the same generated dataset in both engines: relstore takes all six
    // conditions at once, docstore takes the latitude range and the client
    // reduces the rest
    datagen::GenSpec gen;
    gen.n = 5000;
    gen.seed = 6;
    const auto docs = datagen::to_documents(datagen::generate(gen));

    Table table("rel", relstore::charger_schema());
    for (const auto& d : docs) table.insert_row(d);
    docstore::Collection coll("doc");
    coll.bulk_load(docs);

    const auto via_sql = table.select(test::q_star());

    QuerySpec range_only;
    range_only.conditions = {{"latitude", Op::ge, make_number(47.5)},
                             {"latitude", Op::le, make_number(48.0)}};
    const auto inflated = coll.query(range_only);
    std::vector<Condition> rest;
    for (const auto& c : test::q_star()) {
        if (c.field != "latitude") rest.push_back(c);
    }
    const auto reduced = filter_brute_force(inflated.docs, rest);

    CHECK(test::ids_of(via_sql.rows) == test::ids_of(reduced));
    CHECK(via_sql.rows.size() < inflated.docs.size()); // the inflated r set shrinks
}

TEST_CASE("schema invariance under random accepted operations") {
    SplitMix64 rng(41);
    Table table("inv", relstore::charger_schema());
    datagen::GenSpec gen;
    gen.n = 200;
    gen.seed = 1;
    const auto docs = datagen::to_documents(datagen::generate(gen));
    std::size_t next = 0;
    for (int step = 0; step < 300; ++step) {
        try {
            if (next < docs.size() && rng.bounded(2) == 0) {
                table.insert_row(docs[next]);
                ++next;
            } else if (next > 0) {
                const auto id = static_cast<std::int64_t>(1 + rng.bounded(next));
                if (rng.bounded(3) == 0) {
                    table.update_row(make_integer(id), {{"latitude", make_text("bogus")}});
                } else {
                    table.update_row(make_integer(id),
                                     {{"type", make_text(rng.bounded(2) ? "level1" : "level2")}});
                }
            }
        } catch (const Error&) {
            // rejected operations must leave the table consistent
        }
    }
    const auto& schema = table.schema();
    for (const auto& row : table.read_all().rows) {
        for (const auto& col : schema.columns) {
            if (col.required) CHECK(row.has(col.name));
        }
        for (const auto& [name, value] : row.fields) {
            const auto* col = schema.find(name);
            REQUIRE(col != nullptr);
            if (col->type == ColumnType::text) CHECK(is_text(value));
            if (col->type == ColumnType::integer) {
                CHECK(std::holds_alternative<std::int64_t>(value));
            }
            if (col->type == ColumnType::number) CHECK(is_numeric(value));
        }
    }
}
