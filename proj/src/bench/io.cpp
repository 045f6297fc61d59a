#include "evstore/bench/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "evstore/core/error.hpp"

namespace evstore::bench {

using nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

template <typename T>
T parse_number(const std::string& text, const char* what) {
    T value{};
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        raise(Errc::io_error, std::string("malformed ") + what + " value '" + text + "'");
    }
    return value;
}

ordered_json sample_to_json(const LatencySample& s) {
    ordered_json j;
    j["workload"] = workload_name(s.workload);
    j["engine"] = engine_name(s.engine);
    j["n"] = s.n;
    j["r"] = s.r;
    j["r_prime"] = s.r_prime;
    j["elapsed_ms"] = s.elapsed_ms;
    j["op_count"] = s.op_count;
    j["bytes"] = s.bytes;
    j["docs_examined"] = s.scan.docs_examined;
    j["index_comparisons"] = s.scan.index_comparisons;
    j["rows_scanned"] = s.scan.rows_scanned;
    return j;
}

LatencySample sample_from_json(const ordered_json& j) {
    LatencySample s;
    s.workload = parse_workload(j.at("workload").get<std::string>());
    s.engine = parse_engine(j.at("engine").get<std::string>());
    s.n = j.at("n").get<std::size_t>();
    s.r = j.at("r").get<std::size_t>();
    s.r_prime = j.at("r_prime").get<std::size_t>();
    s.elapsed_ms = j.at("elapsed_ms").get<double>();
    s.op_count = j.at("op_count").get<std::size_t>();
    s.bytes = j.at("bytes").get<std::size_t>();
    s.scan.docs_examined = j.at("docs_examined").get<std::uint64_t>();
    s.scan.index_comparisons = j.at("index_comparisons").get<std::uint64_t>();
    s.scan.rows_scanned = j.at("rows_scanned").get<std::uint64_t>();
    return s;
}

} // namespace

void write_samples_csv(std::ostream& out, const std::vector<LatencySample>& samples) {
    out << kSampleCsvHeader << '\n';
    for (const auto& s : samples) {
        out << workload_name(s.workload) << ',' << engine_name(s.engine) << ',' << s.n << ','
            << s.r << ',' << s.r_prime << ',' << fmt(s.elapsed_ms) << ',' << s.op_count << ','
            << s.bytes << ',' << s.scan.docs_examined << ',' << s.scan.index_comparisons << ','
            << s.scan.rows_scanned << '\n';
    }
}

void write_samples_json(std::ostream& out, const std::vector<LatencySample>& samples) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : samples) arr.push_back(sample_to_json(s));
    out << arr.dump(2) << '\n';
}

std::vector<LatencySample> read_samples_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) raise(Errc::io_error, "empty CSV input");
    if (line != kSampleCsvHeader) {
        raise(Errc::io_error, "unexpected CSV header: " + line);
    }
    std::vector<LatencySample> samples;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 11) {
            raise(Errc::io_error, "expected 11 CSV columns, got " +
                                      std::to_string(fields.size()) + ": " + line);
        }
        LatencySample s;
        s.workload = parse_workload(fields[0]);
        s.engine = parse_engine(fields[1]);
        s.n = parse_number<std::size_t>(fields[2], "n");
        s.r = parse_number<std::size_t>(fields[3], "r");
        s.r_prime = parse_number<std::size_t>(fields[4], "r_prime");
        s.elapsed_ms = parse_number<double>(fields[5], "elapsed_ms");
        s.op_count = parse_number<std::size_t>(fields[6], "op_count");
        s.bytes = parse_number<std::size_t>(fields[7], "bytes");
        s.scan.docs_examined = parse_number<std::uint64_t>(fields[8], "docs_examined");
        s.scan.index_comparisons = parse_number<std::uint64_t>(fields[9], "index_comparisons");
        s.scan.rows_scanned = parse_number<std::uint64_t>(fields[10], "rows_scanned");
        samples.push_back(s);
    }
    return samples;
}

std::vector<LatencySample> read_samples_json(std::istream& in) {
    ordered_json arr = ordered_json::parse(in, nullptr, false);
    if (arr.is_discarded() || !arr.is_array()) {
        raise(Errc::io_error, "malformed samples JSON");
    }
    std::vector<LatencySample> samples;
    samples.reserve(arr.size());
    for (const auto& j : arr) samples.push_back(sample_from_json(j));
    return samples;
}

std::vector<LatencySample> read_samples_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::io_error, "cannot open '" + path + "' for reading");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        return read_samples_json(in);
    }
    return read_samples_csv(in);
}

void write_metrics_csv(std::ostream& out, const MetricsTable& table) {
    out << "workload,engine,n,ms_per_op,ops_per_s,kb_per_s\n";
    for (const auto& row : table.rows) {
        out << workload_name(row.workload) << ',' << engine_name(row.engine) << ',' << row.n
            << ',' << fmt(row.ms_per_op) << ',' << fmt(row.ops_per_s) << ','
            << fmt(row.kb_per_s) << '\n';
    }
    out << workload_name(table.mean.workload) << ',' << engine_name(table.mean.engine)
        << ",mean," << fmt(table.mean.ms_per_op) << ',' << fmt(table.mean.ops_per_s) << ','
        << fmt(table.mean.kb_per_s) << '\n';
}

void write_metrics_json(std::ostream& out, const MetricsTable& table) {
    ordered_json j;
    j["rows"] = ordered_json::array();
    auto row_json = [](const MetricsRow& row) {
        return ordered_json{{"workload", workload_name(row.workload)},
                            {"engine", engine_name(row.engine)},
                            {"n", row.n},
                            {"ms_per_op", row.ms_per_op},
                            {"ops_per_s", row.ops_per_s},
                            {"kb_per_s", row.kb_per_s}};
    };
    for (const auto& row : table.rows) j["rows"].push_back(row_json(row));
    j["mean"] = row_json(table.mean);
    out << j.dump(2) << '\n';
}

} // namespace evstore::bench
