#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "evstore/core/error.hpp"
#include "evstore/core/rng.hpp"
#include "evstore/datagen/generator.hpp"
#include "evstore/docstore/collection.hpp"
#include "evstore/queryir/executor.hpp"
#include "evstore/queryir/parser.hpp"
#include "support/fixtures.hpp"

using namespace evstore;
using queryir::charger_api;
using queryir::FieldNode;
using queryir::ParseError;
using queryir::QueryAst;

namespace {

const char* kPaperQuery = R"(
query {
    latitude(
        num: 1000000,
        latmin: 47.5,
        latmax: 48.0,
        longmin: -122.5,
        longmax: -122.1,
        name: 'Howard',
        type: 'level2')
    {
        longitude {
            name {
                type {
                    id
                    name
                    address
                    latitude
                    longitude
                    type
                }
            }
        }
    }
}
)";

docstore::Collection f3_collection() {
    docstore::Collection coll("f3");
    for (const auto& d : test::f3()) coll.insert(d);
    return coll;
}

} // namespace

TEST_CASE("the four-level query parses into the expected tree") {
    const QueryAst ast = queryir::parse(kPaperQuery);
    CHECK(ast.root.name == "latitude");
    REQUIRE(ast.root.args.size() == 7);
    CHECK(ast.root.args[0].first == "num");
    CHECK(std::get<std::int64_t>(ast.root.args[0].second) == 1'000'000);
    CHECK(std::get<double>(ast.root.args[1].second) == 47.5);
    CHECK(std::get<std::string>(ast.root.args[5].second) == "Howard");

    REQUIRE(ast.root.children.size() == 1);
    const FieldNode& longitude = ast.root.children.front();
    CHECK(longitude.name == "longitude");
    REQUIRE(longitude.children.size() == 1);
    const FieldNode& name = longitude.children.front();
    CHECK(name.name == "name");
    REQUIRE(name.children.size() == 1);
    const FieldNode& type = name.children.front();
    CHECK(type.name == "type");
    CHECK(type.children.empty());
    CHECK(type.selections ==
          std::vector<std::string>{"id", "name", "address", "latitude", "longitude", "type"});
}

TEST_CASE("minimal query") {
    const QueryAst ast = queryir::parse("query { latitude(latmin: 0.0, latmax: 1.0) { id } }");
    CHECK(ast.root.args.size() == 2);
    CHECK(ast.root.children.empty());
    CHECK(ast.root.selections == std::vector<std::string>{"id"});
}

TEST_CASE("syntax errors carry positions") {
    try {
        queryir::parse("query { latitude( }");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.code() == Errc::syntax_error);
        CHECK(e.line() == 1);
        CHECK(e.column() == 19); // the closing brace inside the argument list
    }

    CHECK_THROWS_AS(queryir::parse("query latitude { id }"), ParseError);
    CHECK_THROWS_AS(queryir::parse("query { }"), ParseError);
    CHECK_THROWS_AS(queryir::parse("query { latitude { } }"), ParseError);
    CHECK_THROWS_AS(queryir::parse("query { latitude { id } } trailing"), ParseError);
    CHECK_THROWS_AS(queryir::parse("query { latitude(latmin: ) { id } }"), ParseError);
    CHECK_THROWS_AS(queryir::parse("query { latitude(x: 1, x: 2) { id } }"), ParseError);
    CHECK_THROWS_AS(queryir::parse("query { a { b { id } name } }"), ParseError); // mixed block

    // multi-line position
    try {
        queryir::parse("query {\n  latitude(\n    latmin 1) { id }\n}");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("siblings parse but the charger api rejects them") {
    const QueryAst ast = queryir::parse(
        "query { latitude(latmin: 1.0) { longitude { id } name { id } } }");
    CHECK(ast.root.children.size() == 2);
    const auto violations = queryir::validate(ast, charger_api());
    REQUIRE_FALSE(violations.empty());
    CHECK(std::any_of(violations.begin(), violations.end(),
                      [](const auto& v) { return v.kind == "SiblingFields"; }));
}

TEST_CASE("validation accepts the four-level query and reports every violation") {
    const auto schema = charger_api();
    CHECK(queryir::validate(queryir::parse(kPaperQuery), schema).empty());

    const QueryAst bad = queryir::parse(
        "query { foo(latmin: 'abc', bogus: 1) { id } }");
    const auto violations = queryir::validate(bad, schema);
    REQUIRE(violations.size() == 1); // unknown root field reports once
    CHECK(violations.front().kind == "UnknownField");
    CHECK(violations.front().where == "foo");

    const QueryAst mismatch = queryir::parse(
        "query { latitude(latmin: 'abc', bogus: 1) { id name nope } }");
    const auto more = queryir::validate(mismatch, schema);
    auto has = [&](const char* kind, const char* where) {
        return std::any_of(more.begin(), more.end(), [&](const auto& v) {
            return v.kind == kind && v.where == where;
        });
    };
    CHECK(has("ArgTypeMismatch", "latitude.latmin"));
    CHECK(has("UnknownArg", "latitude.bogus"));
    CHECK(has("UnknownSelection", "latitude.nope"));
    CHECK(more.size() == 3); // all violations, not just the first
}

TEST_CASE("execute walks the chain over the fixture") {
    const auto coll = f3_collection();
    const auto result = queryir::execute(queryir::parse(kPaperQuery), charger_api(), coll);

    REQUIRE(result.levels.size() == 4);
    CHECK(result.levels[0].field == "latitude");
    CHECK(result.levels[0].count == 2); // d1 and d3 in the latitude range
    CHECK(result.levels[1].field == "longitude");
    CHECK(result.levels[1].count == 1); // d3 drops out
    CHECK(result.levels[2].count == 1);
    CHECK(result.levels[3].count == 1);

    REQUIRE(result.docs.size() == 1);
    CHECK(result.docs.front().key == "1_11899118thAve");
    CHECK(result.docs.front().fields.size() == 6); // the six selected fields

    // counts never increase down the chain
    for (std::size_t i = 1; i < result.levels.size(); ++i) {
        CHECK(result.levels[i].count <= result.levels[i - 1].count);
    }
}

TEST_CASE("execute over an empty collection is empty at every level") {
    docstore::Collection empty("empty");
    const auto result = queryir::execute(queryir::parse(kPaperQuery), charger_api(), empty);
    for (const auto& level : result.levels) CHECK(level.count == 0);
    CHECK(result.docs.empty());
}

TEST_CASE("execute refuses an unvalidated query") {
    const auto coll = f3_collection();
    const QueryAst bad = queryir::parse("query { foo { id } }");
    try {
        queryir::execute(bad, charger_api(), coll);
        FAIL("expected UnvalidatedAst");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unvalidated_ast);
    }
}

TEST_CASE("explain shows one backend query then filters") {
    const auto steps = queryir::explain(queryir::parse(kPaperQuery), charger_api());
    REQUIRE(steps.size() == 4);
    CHECK(steps[0].field == "latitude");
    CHECK(steps[0].kind == queryir::ResolverKind::backend_query);
    REQUIRE(steps[0].conditions.size() == 2); // the latitude range
    CHECK(steps[0].conditions[0].field == "latitude");
    CHECK(steps[1].kind == queryir::ResolverKind::filter);
    CHECK(steps[1].conditions.size() == 2); // the longitude range
    CHECK(steps[2].kind == queryir::ResolverKind::filter);
    REQUIRE(steps[2].conditions.size() == 1);
    CHECK(steps[2].conditions.front().op == Op::eq);
    CHECK(steps[3].kind == queryir::ResolverKind::filter);

    // single-field query: just the backend step
    const auto single = queryir::explain(
        queryir::parse("query { latitude(latmin: 0.0) { id } }"), charger_api());
    REQUIRE(single.size() == 1);
    CHECK(single.front().kind == queryir::ResolverKind::backend_query);

    // reordered nesting: the root resolver becomes the equality query
    const auto reordered = queryir::explain(
        queryir::parse("query { name(name: 'Howard', latmin: 47.5, latmax: 48.0) "
                       "{ latitude { id } } }"),
        charger_api());
    REQUIRE(reordered.size() == 2);
    CHECK(reordered[0].field == "name");
    CHECK(reordered[0].kind == queryir::ResolverKind::backend_query);
    REQUIRE(reordered[0].conditions.size() == 1);
    CHECK(reordered[0].conditions.front().op == Op::eq);
    CHECK(reordered[1].field == "latitude");
    CHECK(reordered[1].kind == queryir::ResolverKind::filter);
    CHECK(reordered[1].conditions.size() == 2);
}

TEST_CASE("print-parse round trip is structurally identical") {
    for (const char* text :
         {kPaperQuery, "query { latitude(latmin: 0.0, latmax: 1.0) { id } }",
          "query { name(name: 'Howard') { type { id name } } }",
          "query { type { id } }"}) {
        const QueryAst ast = queryir::parse(text);
        const QueryAst again = queryir::parse(queryir::to_text(ast));
        CHECK(ast == again);
    }
}

TEST_CASE("nesting order never changes the final result") {
    datagen::GenSpec gen;
    gen.n = 3000;
    gen.seed = 19;
    docstore::Collection coll("perm");
    coll.bulk_load(datagen::to_documents(datagen::generate(gen)));

    const std::string args = "(latmin: 47.5, latmax: 48.0, longmin: -122.5, longmax: -122.1, "
                             "name: 'Howard', type: 'level2')";
    std::vector<std::string> fields = {"latitude", "longitude", "name", "type"};
    std::sort(fields.begin(), fields.end());

    std::vector<std::string> baseline_keys;
    bool first = true;
    do {
        std::string text = "query { " + fields[0] + args + " { " + fields[1] + " { " +
                           fields[2] + " { " + fields[3] + " { id } } } } }";
        const auto result = queryir::execute(queryir::parse(text), charger_api(), coll);
        std::vector<std::string> keys;
        for (const auto& d : result.docs) keys.push_back(d.key);
        std::sort(keys.begin(), keys.end());
        if (first) {
            baseline_keys = keys;
            first = false;
            CHECK_FALSE(keys.empty());
        } else {
            CHECK(keys == baseline_keys);
        }
    } while (std::next_permutation(fields.begin(), fields.end()));
}

TEST_CASE("execute equals the brute-force oracle on generated data") {
    datagen::GenSpec gen;
    gen.n = 5000;
    gen.seed = 23;
    docstore::Collection coll("oracle");
    coll.bulk_load(datagen::to_documents(datagen::generate(gen)));

    const auto result = queryir::execute(queryir::parse(kPaperQuery), charger_api(), coll);
    const auto oracle = filter_brute_force(coll.read_all().docs, test::q_star());
    CHECK(result.docs.size() == oracle.size());
    CHECK(result.levels.back().count == oracle.size());
    std::vector<std::string> got;
    for (const auto& d : result.docs) got.push_back(d.key);
    std::sort(got.begin(), got.end());
    CHECK(got == test::keys_of(oracle));
}
