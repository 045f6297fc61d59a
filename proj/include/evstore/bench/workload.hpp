#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "evstore/core/condition.hpp"
#include "evstore/core/scan_stats.hpp"

namespace evstore::bench {

enum class Workload {
    single_read_pk,
    iterative_read_secondary,
    read_all,
    single_update,
    iterative_create,
    read_all_filter,
    read_range_filter,
    multi_predicate,
    resolver_query,
};

enum class Engine { docstore, relstore, queryir };

const char* workload_name(Workload w);
const char* engine_name(Engine e);
Workload parse_workload(std::string_view name); // throws UsageError
Engine parse_engine(std::string_view name);     // throws UsageError

/// Iterative workloads at this size and beyond need an explicit opt-in;
/// the cloud experiments hit repeated timeouts there.
inline constexpr std::size_t kHugeIterativeThreshold = 1'000'000;

struct WorkloadSpec {
    Workload workload = Workload::read_all;
    Engine engine = Engine::docstore;
    std::vector<std::size_t> sizes = {10, 100, 1'000, 10'000, 100'000, 1'000'000};
    std::uint64_t seed = 1;
    int repetitions = 1;
    bool allow_huge_iterative = false;

    void validate() const; // throws UnsupportedCombination
};

/// One measured workload execution. Everything except elapsed_ms is a
/// deterministic function of (workload, engine, n, seed).
struct LatencySample {
    Workload workload = Workload::read_all;
    Engine engine = Engine::docstore;
    std::size_t n = 0;
    std::size_t r = 0;       // engine-returned set size
    std::size_t r_prime = 0; // matched size after client-side reduction
    double elapsed_ms = 0.0;
    std::size_t op_count = 0;
    std::size_t bytes = 0; // serialized size of the returned set
    ScanStats scan;
};

/// The canonical four-field query: name, type equality plus latitude and
/// longitude ranges.
std::vector<Condition> canonical_conditions();

/// The latitude range alone, the only part the document engine can take.
std::vector<Condition> latitude_range_conditions();

/// The paper-shaped resolver query: all conditions as root arguments,
/// chained latitude -> longitude -> name -> type.
std::string resolver_query_text(std::size_t n);

std::vector<LatencySample> run(const WorkloadSpec& spec);

} // namespace evstore::bench
