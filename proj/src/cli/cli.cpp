#include "evstore/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "evstore/analytics/cost.hpp"
#include "evstore/analytics/ols.hpp"
#include "evstore/bench/io.hpp"
#include "evstore/bench/metrics.hpp"
#include "evstore/bench/workload.hpp"
#include "evstore/core/error.hpp"
#include "evstore/core/jsonl.hpp"
#include "evstore/datagen/generator.hpp"
#include "evstore/docstore/collection.hpp"
#include "evstore/geohash/geohash.hpp"
#include "evstore/queryir/executor.hpp"
#include "evstore/queryir/parser.hpp"
#include "evstore/relstore/store.hpp"

namespace evstore::cli {

using nlohmann::json;
using nlohmann::ordered_json;

Config Config::from_environment() {
    Config config;
    const char* path = std::getenv("EVSTORE_CONFIG");
    if (path == nullptr || *path == '\0') return config;
    std::ifstream in(path);
    if (!in) raise(Errc::io_error, std::string("cannot open config file '") + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) raise(Errc::io_error, "malformed config JSON");
    if (j.contains("default_seed")) config.default_seed = j.at("default_seed").get<std::uint64_t>();
    if (j.contains("default_sizes")) {
        config.default_sizes = j.at("default_sizes").get<std::vector<std::size_t>>();
    }
    if (j.contains("price_sheet")) config.price_sheet_path = j.at("price_sheet").get<std::string>();
    if (j.contains("out_dir")) config.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("month_days")) config.month_days = j.at("month_days").get<int>();
    if (j.contains("geohash_precision")) {
        config.geohash_precision = j.at("geohash_precision").get<int>();
    }
    return config;
}

namespace {

json parse_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) raise(Errc::io_error, std::string("cannot open ") + what + " file '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) {
        raise(Errc::io_error, std::string("malformed JSON in ") + what + " file '" + path + "'");
    }
    return j;
}

analytics::PriceSheet load_prices(const std::string& flag_path, const Config& config) {
    std::string path = !flag_path.empty() ? flag_path : config.price_sheet_path;
    if (path.empty()) {
        auto prices = analytics::PriceSheet::defaults();
        prices.days_per_month = config.month_days;
        return prices;
    }
    auto prices = analytics::PriceSheet::from_json(parse_json_file(path, "price sheet"));
    return prices;
}

/// Writes to the file when a path is given, otherwise to fallback.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) raise(Errc::io_error, "cannot open '" + path + "' for writing");
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

relstore::Schema schema_from_header(const ordered_json& header) {
    relstore::Schema schema;
    for (const auto& col : header.at("columns")) {
        relstore::Column c;
        c.name = col.at("name").get<std::string>();
        c.type = relstore::parse_column_type(col.at("type").get<std::string>());
        c.required = col.value("required", false);
        schema.columns.push_back(std::move(c));
    }
    schema.primary_key = header.at("primary_key").get<std::string>();
    return schema;
}

relstore::Schema schema_for(const JsonlFile& file) {
    if (file.header && file.header->contains("columns")) {
        return schema_from_header(*file.header);
    }
    const bool with_geohash = !file.docs.empty() && file.docs.front().has("geohash");
    return relstore::charger_schema(with_geohash);
}

ordered_json schema_header(const relstore::Schema& schema) {
    ordered_json cols = ordered_json::array();
    for (const auto& c : schema.columns) {
        cols.push_back({{"name", c.name},
                        {"type", relstore::column_type_name(c.type)},
                        {"required", c.required}});
    }
    return {{"columns", cols}, {"primary_key", schema.primary_key}};
}

int cmd_gen(const std::string& out_path, std::size_t n, std::uint64_t seed, bool continuous,
            int geohash_precision, std::ostream& fallback) {
    datagen::GenSpec spec;
    spec.n = n;
    spec.seed = seed;
    spec.continuous_coords = continuous;
    if (geohash_precision > 0) spec.geohash_precision = geohash_precision;
    const auto records = datagen::generate(spec);
    const auto docs = datagen::to_documents(records, spec.geohash_precision);
    OutputTarget target(out_path, fallback);
    write_jsonl(target.stream(), datagen::dataset_header(spec), docs);
    return 0;
}

int cmd_load(const std::string& engine, const std::string& data_path,
             const std::string& collection_name, const std::string& out_path,
             std::ostream& fallback) {
    const JsonlFile file = read_jsonl_file(data_path);
    OutputTarget target(out_path, fallback);
    if (engine == "docstore") {
        docstore::Collection coll(collection_name);
        coll.bulk_load(file.docs);
        const auto all = coll.read_all();
        ordered_json header = {{"collection", collection_name}, {"count", coll.size()}};
        write_jsonl(target.stream(), header, all.docs);
        return 0;
    }
    if (engine == "relstore") {
        const auto schema = schema_for(file);
        relstore::Table table(collection_name, schema);
        for (const auto& doc : file.docs) table.insert_row(doc);
        const auto all = table.read_all();
        ordered_json header = schema_header(schema);
        header["table"] = collection_name;
        header["count"] = table.size();
        write_jsonl(target.stream(), header, all.rows);
        return 0;
    }
    raise(Errc::usage_error, "load supports engines docstore and relstore");
}

int cmd_query(const std::string& engine, const std::string& data_path, const std::string& cond,
              const std::string& query_text, const std::string& query_file, std::size_t limit,
              const std::string& project_csv, const std::string& levels_out,
              std::ostream& fallback_out) {
    const JsonlFile file = read_jsonl_file(data_path);

    QuerySpec spec;
    spec.conditions = parse_condition_list(cond);
    if (limit > 0) spec.limit = limit;
    if (!project_csv.empty()) {
        std::vector<std::string> fields;
        std::istringstream in(project_csv);
        std::string f;
        while (std::getline(in, f, ',')) fields.push_back(f);
        spec.projection = std::move(fields);
    }

    ordered_json results = ordered_json::array();
    if (engine == "docstore") {
        docstore::Collection coll("query");
        coll.bulk_load(file.docs);
        const auto result = coll.query(spec);
        for (const auto& doc : result.docs) results.push_back(to_json(doc));
    } else if (engine == "relstore") {
        const auto schema = schema_for(file);
        relstore::Table table("query", schema);
        for (const auto& doc : file.docs) table.insert_row(doc);
        const auto result = table.select(spec.conditions);
        auto rows = result.rows;
        if (spec.limit && rows.size() > *spec.limit) rows.resize(*spec.limit);
        for (auto& row : rows) {
            results.push_back(to_json(spec.projection ? project(row, *spec.projection) : row));
        }
    } else if (engine == "queryir") {
        std::string text = query_text;
        if (text.empty() && !query_file.empty()) {
            std::ifstream in(query_file);
            if (!in) raise(Errc::io_error, "cannot open query file '" + query_file + "'");
            std::ostringstream buffer;
            buffer << in.rdbuf();
            text = buffer.str();
        }
        if (text.empty()) {
            raise(Errc::usage_error, "queryir needs --query-text or --query-file");
        }
        docstore::Collection coll("query");
        coll.bulk_load(file.docs);
        const auto ast = queryir::parse(text);
        const auto result = queryir::execute(ast, queryir::charger_api(), coll);
        for (const auto& doc : result.docs) results.push_back(to_json(doc));
        ordered_json levels = ordered_json::array();
        for (const auto& level : result.levels) {
            levels.push_back({{"field", level.field}, {"count", level.count}});
        }
        if (!levels_out.empty()) {
            std::ofstream out(levels_out);
            if (!out) raise(Errc::io_error, "cannot open '" + levels_out + "' for writing");
            out << ordered_json{{"levels", levels}}.dump(2) << '\n';
        }
    } else {
        raise(Errc::usage_error, "unknown engine '" + engine + "'");
    }
    fallback_out << results.dump(2) << '\n';
    return 0;
}

int cmd_bench(const Config& config, const std::string& workload, const std::string& engine,
              const std::vector<std::size_t>& sizes, std::uint64_t seed, int reps,
              bool allow_huge, const std::string& out_path, const std::string& format,
              bool with_metrics, std::ostream& fallback) {
    bench::WorkloadSpec spec;
    spec.workload = bench::parse_workload(workload);
    spec.engine = bench::parse_engine(engine);
    spec.sizes = sizes.empty() ? config.default_sizes : sizes;
    spec.seed = seed;
    spec.repetitions = reps;
    spec.allow_huge_iterative = allow_huge;

    const auto samples = bench::run(spec);

    std::string path = out_path;
    if (path.empty() && !config.out_dir.empty()) {
        path = config.out_dir + "/bench_" + workload + "_" + engine + "." + format;
    }
    OutputTarget target(path, fallback);
    if (format == "json") {
        bench::write_samples_json(target.stream(), samples);
    } else {
        bench::write_samples_csv(target.stream(), samples);
    }
    if (with_metrics) {
        const auto table = bench::metrics(samples);
        bench::write_metrics_csv(fallback, table);
    }
    return 0;
}

int cmd_fit(const std::string& csv_path, const std::string& predictors_csv,
            std::ostream& out) {
    const auto samples = bench::read_samples_file(csv_path);
    if (samples.empty()) raise(Errc::empty_input, "no samples in '" + csv_path + "'");

    std::vector<std::string> names;
    std::istringstream in(predictors_csv);
    std::string name;
    while (std::getline(in, name, ',')) names.push_back(name);
    if (names.empty()) raise(Errc::usage_error, "no predictors given");

    std::vector<double> response;
    response.reserve(samples.size());
    for (const auto& s : samples) response.push_back(s.elapsed_ms);
    std::vector<std::vector<double>> columns;
    for (const auto& predictor : names) {
        std::vector<double> column;
        column.reserve(samples.size());
        for (const auto& s : samples) {
            if (predictor == "n") {
                column.push_back(static_cast<double>(s.n));
            } else if (predictor == "r") {
                column.push_back(static_cast<double>(s.r));
            } else if (predictor == "r_prime") {
                column.push_back(static_cast<double>(s.r_prime));
            } else {
                raise(Errc::usage_error, "unknown predictor '" + predictor +
                                             "' (expected n, r or r_prime)");
            }
        }
        columns.push_back(std::move(column));
    }

    const auto fit = analytics::ols_fit(response, columns, names);
    ordered_json j;
    j["response"] = "elapsed_ms";
    j["predictors"] = fit.predictor_names;
    j["intercept"] = fit.intercept;
    j["coefficients"] = ordered_json::object();
    j["se"] = ordered_json::object();
    j["se"]["intercept"] = fit.intercept_se;
    for (std::size_t i = 0; i < fit.coefficients.size(); ++i) {
        j["coefficients"][fit.predictor_names[i]] = fit.coefficients[i];
        j["se"][fit.predictor_names[i]] = fit.coefficient_se[i];
    }
    j["r_squared"] = fit.r_squared;
    j["rss"] = fit.rss;
    j["m"] = fit.m;
    j["p"] = fit.p;
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_cost(const Config& config, const std::string& usage_path, const std::string& prices_path,
             const std::string& model, bool as_json, std::ostream& out) {
    const auto usage = analytics::UsageProfile::from_json(parse_json_file(usage_path, "usage"));
    const auto prices = load_prices(prices_path, config);

    std::vector<analytics::CostReport> reports;
    if (model == "per_use" || model == "both") {
        reports.push_back(analytics::per_use_cost(usage, prices));
    }
    if (model == "per_resource" || model == "both") {
        reports.push_back(analytics::per_resource_cost(usage, prices));
    }
    if (reports.empty()) {
        raise(Errc::usage_error, "model must be per_use, per_resource or both");
    }
    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        out << (reports.size() == 1 ? arr.front().dump(2) : arr.dump(2)) << '\n';
    } else {
        for (const auto& r : reports) out << r.to_text();
    }
    return 0;
}

int cmd_crossover(const Config& config, const std::string& usage_path,
                  const std::string& prices_path, std::int64_t step, std::int64_t max_ops,
                  const std::string& out_path, std::ostream& out, std::ostream& fallback) {
    analytics::UsageProfile base;
    // the study's setup: the full dataset stored, a modest egress
    base.stored_gb = 1.9;
    base.resources = {1.0, 0.614, 10.0, 0.076};
    if (!usage_path.empty()) {
        base = analytics::UsageProfile::from_json(parse_json_file(usage_path, "usage"));
    }
    const auto prices = load_prices(prices_path, config);
    const auto result = analytics::crossover(prices, base, step, max_ops);

    OutputTarget target(out_path, fallback);
    target.stream() << "ops_per_day,per_use,per_resource\n";
    for (const auto& row : result.rows) {
        target.stream() << row.ops_per_day << ',' << row.per_use.str() << ','
                        << row.per_resource.str() << '\n';
    }
    ordered_json j;
    if (result.crossover_ops_per_day) {
        j["crossover_ops_per_day"] = *result.crossover_ops_per_day;
    } else {
        j["crossover_ops_per_day"] = nullptr;
    }
    out << j.dump() << '\n';
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"EV-charger storage workbench: document vs relational engines, "
                 "benchmarks, latency models, cost models, geohash tools"};
    app.require_subcommand(1);

    Config config;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a mock charger dataset (JSON lines)");
    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 0;
    bool gen_seed_given = false;
    std::string gen_out;
    bool gen_continuous = false;
    int gen_geohash = 0;
    gen->add_option("--n", gen_n, "record count")->required();
    gen->add_option("--seed", gen_seed, "generator seed")->each([&](const std::string&) {
        gen_seed_given = true;
    });
    gen->add_option("--out", gen_out, "output file (default stdout)");
    gen->add_flag("--continuous", gen_continuous, "continuous coordinates instead of levels");
    gen->add_option("--geohash-precision", gen_geohash, "add a geohash field at this precision");

    // load
    auto* load = app.add_subcommand("load", "Load a dataset into an engine, dump a snapshot");
    std::string load_engine, load_data, load_coll = "chargers", load_out;
    load->add_option("--engine", load_engine, "docstore|relstore")->required();
    load->add_option("--data", load_data, "JSON-lines input file")->required();
    load->add_option("--collection", load_coll, "collection/table name");
    load->add_option("--out", load_out, "snapshot file (default stdout)");

    // query
    auto* query = app.add_subcommand("query", "Run an ad-hoc query against an engine");
    std::string q_engine, q_data, q_cond, q_text, q_file, q_project, q_levels;
    std::size_t q_limit = 0;
    query->add_option("--engine", q_engine, "docstore|relstore|queryir")->required();
    query->add_option("--data", q_data, "JSON-lines input file")->required();
    query->add_option("--cond", q_cond, "conditions, e.g. \"latitude>=47.5,name=Howard\"");
    query->add_option("--query-text", q_text, "resolver query text (queryir)");
    query->add_option("--query-file", q_file, "file with resolver query text (queryir)");
    query->add_option("--limit", q_limit, "result limit");
    query->add_option("--project", q_project, "comma-separated projection fields");
    query->add_option("--levels-out", q_levels, "write per-level counts JSON here (queryir)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark workloads");
    auto* bench_run = bench_cmd->add_subcommand("run", "Run one workload across sizes");
    std::string b_workload, b_engine, b_out, b_format = "csv";
    std::vector<std::size_t> b_sizes;
    std::uint64_t b_seed = 0;
    bool b_seed_given = false;
    int b_reps = 1;
    bool b_huge = false, b_metrics = false;
    bench_run->add_option("--workload", b_workload, "workload name")->required();
    bench_run->add_option("--engine", b_engine, "docstore|relstore|queryir")->required();
    bench_run->add_option("--sizes", b_sizes, "collection sizes")->delimiter(',');
    bench_run->add_option("--seed", b_seed, "dataset seed")->each([&](const std::string&) {
        b_seed_given = true;
    });
    bench_run->add_option("--reps", b_reps, "repetitions per size");
    bench_run->add_flag("--allow-huge-iterative", b_huge, "allow iterative workloads at n >= 10^6");
    bench_run->add_option("--out", b_out, "output file (default stdout)");
    bench_run->add_option("--format", b_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    bench_run->add_flag("--metrics", b_metrics, "also print the metrics table");

    // fit
    auto* fit = app.add_subcommand("fit", "OLS latency fit over a bench CSV");
    std::string f_csv, f_predictors = "n";
    fit->add_option("--csv", f_csv, "bench samples CSV or JSON")->required();
    fit->add_option("--predictors", f_predictors, "comma-separated: n,r,r_prime");

    // cost
    auto* cost = app.add_subcommand("cost", "Cost report for a usage profile");
    std::string c_usage, c_prices, c_model = "both";
    bool c_json = false;
    cost->add_option("--usage", c_usage, "usage profile JSON")->required();
    cost->add_option("--prices", c_prices, "price sheet JSON (default: built-in)");
    cost->add_option("--model", c_model, "per_use|per_resource|both");
    cost->add_flag("--json", c_json, "JSON output");

    // crossover
    auto* cross = app.add_subcommand("crossover", "Per-use vs per-resource cost sweep");
    std::string x_usage, x_prices, x_out;
    std::int64_t x_step = 100'000, x_max = 2'000'000;
    cross->add_option("--usage", x_usage, "base usage profile JSON");
    cross->add_option("--prices", x_prices, "price sheet JSON");
    cross->add_option("--step", x_step, "ops/day step");
    cross->add_option("--max", x_max, "ops/day sweep limit");
    cross->add_option("--out", x_out, "curve CSV file (default stdout)");

    // geohash
    auto* geo = app.add_subcommand("geohash", "Geohash utilities");
    auto* geo_enc = geo->add_subcommand("encode", "Encode lat/long");
    double ge_lat = 0, ge_long = 0;
    int ge_prec = 0;
    geo_enc->add_option("--lat", ge_lat, "latitude")->required();
    geo_enc->add_option("--long", ge_long, "longitude")->required();
    geo_enc->add_option("--precision", ge_prec, "1..12 (default from config)");
    auto* geo_dec = geo->add_subcommand("decode", "Decode a hash to its box");
    std::string gd_hash;
    geo_dec->add_option("hash", gd_hash, "geohash string")->required();
    auto* geo_cov = geo->add_subcommand("cover", "Prefix cover of a bounding box");
    double gc_lat_min = 0, gc_lat_max = 0, gc_long_min = 0, gc_long_max = 0;
    int gc_prec = 0;
    std::size_t gc_max = 1024;
    geo_cov->add_option("--lat-min", gc_lat_min)->required();
    geo_cov->add_option("--lat-max", gc_lat_max)->required();
    geo_cov->add_option("--long-min", gc_long_min)->required();
    geo_cov->add_option("--long-max", gc_long_max)->required();
    geo_cov->add_option("--precision", gc_prec, "1..12 (default from config)");
    geo_cov->add_option("--max-prefixes", gc_max, "cover size limit");

    std::vector<const char*> argv;
    argv.push_back("evstore");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: UsageError: " << e.what() << '\n';
        return 1;
    }

    try {
        config = Config::from_environment();
        if (!gen_seed_given) gen_seed = config.default_seed;
        if (!b_seed_given) b_seed = config.default_seed;
        if (ge_prec == 0) ge_prec = config.geohash_precision;
        if (gc_prec == 0) gc_prec = config.geohash_precision;

        if (gen->parsed()) {
            return cmd_gen(gen_out, gen_n, gen_seed, gen_continuous, gen_geohash, out);
        }
        if (load->parsed()) {
            return cmd_load(load_engine, load_data, load_coll, load_out, out);
        }
        if (query->parsed()) {
            return cmd_query(q_engine, q_data, q_cond, q_text, q_file, q_limit, q_project,
                             q_levels, out);
        }
        if (bench_cmd->parsed()) {
            if (!bench_run->parsed()) {
                err << "error: UsageError: bench requires the 'run' subcommand\n";
                return 1;
            }
            return cmd_bench(config, b_workload, b_engine, b_sizes, b_seed, b_reps, b_huge,
                             b_out, b_format, b_metrics, out);
        }
        if (fit->parsed()) return cmd_fit(f_csv, f_predictors, out);
        if (cost->parsed()) return cmd_cost(config, c_usage, c_prices, c_model, c_json, out);
        if (cross->parsed()) {
            return cmd_crossover(config, x_usage, x_prices, x_step, x_max, x_out, out, out);
        }
        if (geo->parsed()) {
            if (geo_enc->parsed()) {
                out << geohash::encode(ge_lat, ge_long, ge_prec) << '\n';
                return 0;
            }
            if (geo_dec->parsed()) {
                const auto box = geohash::decode(gd_hash);
                out << "lat [" << box.lat_min << ", " << box.lat_max << "] long ["
                    << box.long_min << ", " << box.long_max << "]\n";
                return 0;
            }
            if (geo_cov->parsed()) {
                const geohash::GeoBox box{gc_lat_min, gc_lat_max, gc_long_min, gc_long_max};
                for (const auto& prefix : geohash::cover(box, gc_prec, gc_max)) {
                    out << prefix << '\n';
                }
                return 0;
            }
            err << "error: UsageError: geohash requires encode, decode or cover\n";
            return 1;
        }
        err << "error: UsageError: no subcommand\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.tag() << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: Internal: " << e.what() << '\n';
        return 2;
    }
}

} // namespace evstore::cli
