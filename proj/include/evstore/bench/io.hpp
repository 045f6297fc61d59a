#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "evstore/bench/metrics.hpp"
#include "evstore/bench/workload.hpp"

namespace evstore::bench {

inline constexpr const char* kSampleCsvHeader =
    "workload,engine,n,r,r_prime,elapsed_ms,op_count,bytes,docs_examined,"
    "index_comparisons,rows_scanned";

void write_samples_csv(std::ostream& out, const std::vector<LatencySample>& samples);
void write_samples_json(std::ostream& out, const std::vector<LatencySample>& samples);
std::vector<LatencySample> read_samples_csv(std::istream& in);   // throws IoError
std::vector<LatencySample> read_samples_json(std::istream& in);  // throws IoError
std::vector<LatencySample> read_samples_file(const std::string& path); // by extension

void write_metrics_csv(std::ostream& out, const MetricsTable& table);
void write_metrics_json(std::ostream& out, const MetricsTable& table);

} // namespace evstore::bench
