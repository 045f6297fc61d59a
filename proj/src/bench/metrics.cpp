#include "evstore/bench/metrics.hpp"

#include <limits>

#include "evstore/core/error.hpp"

namespace evstore::bench {

namespace {

double rate(double numerator, double elapsed_ms) {
    if (elapsed_ms <= 0.0) {
        return numerator > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    return numerator / elapsed_ms;
}

} // namespace

MetricsTable metrics(const std::vector<LatencySample>& samples, double avg_doc_bytes) {
    if (samples.empty()) raise(Errc::empty_input, "no samples");
    MetricsTable table;
    table.rows.reserve(samples.size());
    for (const auto& s : samples) {
        MetricsRow row;
        row.workload = s.workload;
        row.engine = s.engine;
        row.n = s.n;
        row.ms_per_op = s.op_count > 0 ? s.elapsed_ms / static_cast<double>(s.op_count) : 0.0;
        row.ops_per_s = rate(1000.0 * static_cast<double>(s.op_count), s.elapsed_ms);
        row.kb_per_s = rate(static_cast<double>(s.r) * avg_doc_bytes / 1.024, s.elapsed_ms);
        table.rows.push_back(row);
    }
    table.mean.workload = samples.front().workload;
    table.mean.engine = samples.front().engine;
    for (const auto& row : table.rows) {
        table.mean.ms_per_op += row.ms_per_op;
        table.mean.ops_per_s += row.ops_per_s;
        table.mean.kb_per_s += row.kb_per_s;
    }
    const auto count = static_cast<double>(table.rows.size());
    table.mean.ms_per_op /= count;
    table.mean.ops_per_s /= count;
    table.mean.kb_per_s /= count;
    return table;
}

} // namespace evstore::bench
