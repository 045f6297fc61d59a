#pragma once

#include <vector>

#include "evstore/bench/workload.hpp"

namespace evstore::bench {

inline constexpr double kDefaultAvgDocBytes = 76.0;

/// Per-sample derived metrics, plus a mean row, matching the shape of the
/// study's summary tables. A zero elapsed time reports the rate as an
/// infinity sentinel rather than failing.
struct MetricsRow {
    Workload workload = Workload::read_all;
    Engine engine = Engine::docstore;
    std::size_t n = 0;
    double ms_per_op = 0.0;
    double ops_per_s = 0.0;
    double kb_per_s = 0.0;
};

struct MetricsTable {
    std::vector<MetricsRow> rows;
    MetricsRow mean; // arithmetic mean over rows; n is left 0
};

/// ms/op = elapsed/ops; ops/s = 1000*ops/elapsed;
/// kB/s = (r * avg_doc_bytes / 1024) / (elapsed/1000).
/// Throws EmptyInput.
MetricsTable metrics(const std::vector<LatencySample>& samples,
                     double avg_doc_bytes = kDefaultAvgDocBytes);

} // namespace evstore::bench
