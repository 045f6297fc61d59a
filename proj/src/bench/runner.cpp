#include <algorithm>
#include <chrono>

#include "evstore/bench/workload.hpp"
#include "evstore/core/error.hpp"
#include "evstore/core/jsonl.hpp"
#include "evstore/datagen/generator.hpp"
#include "evstore/docstore/collection.hpp"
#include "evstore/queryir/executor.hpp"
#include "evstore/queryir/parser.hpp"
#include "evstore/relstore/store.hpp"

namespace evstore::bench {

const char* workload_name(Workload w) {
    switch (w) {
        case Workload::single_read_pk: return "single_read_pk";
        case Workload::iterative_read_secondary: return "iterative_read_secondary";
        case Workload::read_all: return "read_all";
        case Workload::single_update: return "single_update";
        case Workload::iterative_create: return "iterative_create";
        case Workload::read_all_filter: return "read_all_filter";
        case Workload::read_range_filter: return "read_range_filter";
        case Workload::multi_predicate: return "multi_predicate";
        case Workload::resolver_query: return "resolver_query";
    }
    return "?";
}

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::docstore: return "docstore";
        case Engine::relstore: return "relstore";
        case Engine::queryir: return "queryir";
    }
    return "?";
}

Workload parse_workload(std::string_view name) {
    for (const Workload w :
         {Workload::single_read_pk, Workload::iterative_read_secondary, Workload::read_all,
          Workload::single_update, Workload::iterative_create, Workload::read_all_filter,
          Workload::read_range_filter, Workload::multi_predicate, Workload::resolver_query}) {
        if (name == workload_name(w)) return w;
    }
    raise(Errc::usage_error, "unknown workload '" + std::string(name) + "'");
}

Engine parse_engine(std::string_view name) {
    for (const Engine e : {Engine::docstore, Engine::relstore, Engine::queryir}) {
        if (name == engine_name(e)) return e;
    }
    raise(Errc::usage_error, "unknown engine '" + std::string(name) + "'");
}

void WorkloadSpec::validate() const {
    if (sizes.empty()) raise(Errc::unsupported_combination, "no sizes given");
    for (const auto n : sizes) {
        if (n == 0) raise(Errc::unsupported_combination, "sizes must be positive");
    }
    if (repetitions < 1) raise(Errc::unsupported_combination, "repetitions must be >= 1");

    const bool queryir_engine = engine == Engine::queryir;
    if (workload == Workload::resolver_query && !queryir_engine) {
        raise(Errc::unsupported_combination, "resolver_query runs on the queryir engine");
    }
    if (workload != Workload::resolver_query && queryir_engine) {
        raise(Errc::unsupported_combination,
              "the queryir engine only runs the resolver_query workload");
    }
    if (workload == Workload::multi_predicate && engine != Engine::relstore) {
        raise(Errc::unsupported_combination, "multi_predicate runs on relstore only");
    }
    if (workload == Workload::read_range_filter && engine != Engine::docstore) {
        raise(Errc::unsupported_combination, "read_range_filter runs on docstore only");
    }
    const bool iterative = workload == Workload::iterative_read_secondary ||
                           workload == Workload::iterative_create;
    if (iterative && !allow_huge_iterative) {
        for (const auto n : sizes) {
            if (n >= kHugeIterativeThreshold) {
                raise(Errc::unsupported_combination,
                      "iterative workloads at n >= 10^6 need allow_huge_iterative");
            }
        }
    }
}

std::vector<Condition> canonical_conditions() {
    return {
        {"name", Op::eq, make_text("Howard")},
        {"latitude", Op::ge, make_number(47.5)},
        {"latitude", Op::le, make_number(48.0)},
        {"longitude", Op::ge, make_number(-122.5)},
        {"longitude", Op::le, make_number(-122.1)},
        {"type", Op::eq, make_text("level2")},
    };
}

std::vector<Condition> latitude_range_conditions() {
    return {
        {"latitude", Op::ge, make_number(47.5)},
        {"latitude", Op::le, make_number(48.0)},
    };
}

std::string resolver_query_text(std::size_t n) {
    return "query {\n"
           "  latitude(\n"
           "    num: " + std::to_string(n) + ",\n"
           "    latmin: 47.5,\n"
           "    latmax: 48.0,\n"
           "    longmin: -122.5,\n"
           "    longmax: -122.1,\n"
           "    name: 'Howard',\n"
           "    type: 'level2') {\n"
           "    longitude {\n"
           "      name {\n"
           "        type {\n"
           "          id\n"
           "          name\n"
           "          address\n"
           "          latitude\n"
           "          longitude\n"
           "          type\n"
           "        }\n"
           "      }\n"
           "    }\n"
           "  }\n"
           "}\n";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::size_t doc_bytes(const std::vector<Document>& docs) {
    std::size_t total = 0;
    for (const auto& d : docs) total += serialized_size(d);
    return total;
}

std::vector<Condition> non_latitude_conditions() {
    std::vector<Condition> rest;
    for (const auto& c : canonical_conditions()) {
        if (c.field != "latitude") rest.push_back(c);
    }
    return rest;
}

LatencySample run_docstore(const WorkloadSpec& spec, std::size_t n,
                           const std::vector<ChargerRecord>& records,
                           const std::vector<Document>& docs) {
    LatencySample s;
    s.n = n;

    docstore::Collection coll("bench_" + std::to_string(n));
    if (spec.workload != Workload::iterative_create) {
        coll.bulk_load(docs);
    }

    const auto start = Clock::now();
    switch (spec.workload) {
        case Workload::single_read_pk: {
            auto [doc, stats] = coll.get(datagen::derive_key(records.front()));
            s.r = 1;
            s.r_prime = 1;
            s.op_count = 1;
            s.bytes = serialized_size(doc);
            s.scan = stats;
            break;
        }
        case Workload::iterative_read_secondary: {
            for (std::size_t i = 1; i <= n; ++i) {
                QuerySpec q;
                q.conditions = {{"id", Op::eq, make_integer(static_cast<std::int64_t>(i))}};
                auto result = coll.query(q);
                s.r += result.docs.size();
                s.bytes += doc_bytes(result.docs);
                s.scan += result.stats;
            }
            s.r_prime = s.r;
            s.op_count = n;
            break;
        }
        case Workload::read_all: {
            auto result = coll.read_all();
            s.r = result.docs.size();
            s.r_prime = s.r;
            s.op_count = 1;
            s.bytes = doc_bytes(result.docs);
            s.scan = result.stats;
            break;
        }
        case Workload::single_update: {
            const auto key = datagen::derive_key(records.front());
            const char* flipped = records.front().type == "level2" ? "level1" : "level2";
            s.scan = coll.update(key, {{"type", make_text(flipped)}});
            s.op_count = 1;
            break;
        }
        case Workload::iterative_create: {
            for (const auto& doc : docs) s.scan += coll.insert(doc);
            s.op_count = n;
            break;
        }
        case Workload::read_all_filter: {
            auto result = coll.read_all();
            s.r = result.docs.size();
            s.bytes = doc_bytes(result.docs);
            s.scan = result.stats;
            s.r_prime = filter_brute_force(result.docs, canonical_conditions()).size();
            s.op_count = 1;
            break;
        }
        case Workload::read_range_filter: {
            QuerySpec q;
            q.conditions = latitude_range_conditions();
            auto result = coll.query(q);
            s.r = result.docs.size();
            s.bytes = doc_bytes(result.docs);
            s.scan = result.stats;
            s.r_prime = filter_brute_force(result.docs, non_latitude_conditions()).size();
            s.op_count = 1;
            break;
        }
        default:
            raise(Errc::unsupported_combination, "workload not valid for docstore");
    }
    s.elapsed_ms = ms_since(start);
    return s;
}

LatencySample run_relstore(const WorkloadSpec& spec, std::size_t n,
                           const std::vector<Document>& docs) {
    LatencySample s;
    s.n = n;

    relstore::Table table("bench_" + std::to_string(n), relstore::charger_schema());
    if (spec.workload != Workload::iterative_create) {
        for (const auto& doc : docs) table.insert_row(doc);
    }

    const auto start = Clock::now();
    switch (spec.workload) {
        case Workload::single_read_pk: {
            auto result = table.select({{"id", Op::eq, make_integer(1)}});
            s.r = result.rows.size();
            s.r_prime = s.r;
            s.op_count = 1;
            s.bytes = doc_bytes(result.rows);
            s.scan = result.stats;
            break;
        }
        case Workload::iterative_read_secondary: {
            for (std::size_t i = 1; i <= n; ++i) {
                auto result =
                    table.select({{"id", Op::eq, make_integer(static_cast<std::int64_t>(i))}});
                s.r += result.rows.size();
                s.bytes += doc_bytes(result.rows);
                s.scan += result.stats;
            }
            s.r_prime = s.r;
            s.op_count = n;
            break;
        }
        case Workload::read_all: {
            auto result = table.read_all();
            s.r = result.rows.size();
            s.r_prime = s.r;
            s.op_count = 1;
            s.bytes = doc_bytes(result.rows);
            s.scan = result.stats;
            break;
        }
        case Workload::single_update: {
            const FieldValue type = *docs.front().find("type");
            const char* flipped =
                std::get<std::string>(type) == "level2" ? "level1" : "level2";
            s.scan = table.update_row(make_integer(1), {{"type", make_text(flipped)}});
            s.op_count = 1;
            break;
        }
        case Workload::iterative_create: {
            for (const auto& doc : docs) s.scan += table.insert_row(doc);
            s.op_count = n;
            break;
        }
        case Workload::read_all_filter: {
            auto result = table.read_all();
            s.r = result.rows.size();
            s.bytes = doc_bytes(result.rows);
            s.scan = result.stats;
            s.r_prime = filter_brute_force(result.rows, canonical_conditions()).size();
            s.op_count = 1;
            break;
        }
        case Workload::multi_predicate: {
            auto result = table.select(canonical_conditions());
            s.r = result.rows.size();
            s.r_prime = s.r;
            s.op_count = 1;
            s.bytes = doc_bytes(result.rows);
            s.scan = result.stats;
            break;
        }
        default:
            raise(Errc::unsupported_combination, "workload not valid for relstore");
    }
    s.elapsed_ms = ms_since(start);
    return s;
}

LatencySample run_queryir(std::size_t n, const std::vector<Document>& docs) {
    LatencySample s;
    s.n = n;

    docstore::Collection coll("bench_" + std::to_string(n));
    coll.bulk_load(docs);
    const auto ast = queryir::parse(resolver_query_text(n));
    const auto schema = queryir::charger_api();

    const auto start = Clock::now();
    auto result = queryir::execute(ast, schema, coll);
    s.elapsed_ms = ms_since(start);

    s.r = result.levels.front().count;
    s.r_prime = result.levels.back().count;
    s.op_count = 1;
    s.bytes = doc_bytes(result.docs);
    s.scan = result.stats;
    return s;
}

} // namespace

std::vector<LatencySample> run(const WorkloadSpec& spec) {
    spec.validate();
    std::vector<LatencySample> samples;
    samples.reserve(spec.sizes.size() * static_cast<std::size_t>(spec.repetitions));
    for (const auto n : spec.sizes) {
        datagen::GenSpec gen;
        gen.n = n;
        gen.seed = spec.seed;
        const auto records = datagen::generate(gen);
        const auto docs = datagen::to_documents(records);
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            LatencySample s;
            switch (spec.engine) {
                case Engine::docstore: s = run_docstore(spec, n, records, docs); break;
                case Engine::relstore: s = run_relstore(spec, n, docs); break;
                case Engine::queryir: s = run_queryir(n, docs); break;
            }
            s.workload = spec.workload;
            s.engine = spec.engine;
            samples.push_back(s);
        }
    }
    return samples;
}

} // namespace evstore::bench
