#pragma once

#include <cstdint>

namespace evstore {

/// Deterministic work counters. These stand in for wall-clock time in all
/// complexity assertions: they are functions of (data, query) only.
struct ScanStats {
    std::uint64_t docs_examined = 0;
    std::uint64_t index_comparisons = 0;
    std::uint64_t rows_scanned = 0;

    ScanStats& operator+=(const ScanStats& o) {
        docs_examined += o.docs_examined;
        index_comparisons += o.index_comparisons;
        rows_scanned += o.rows_scanned;
        return *this;
    }

    bool operator==(const ScanStats&) const = default;
};

} // namespace evstore
