#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "evstore/analytics/money.hpp"

namespace evstore::analytics {

/// Per-use (serverless) and per-resource (dedicated server) price sheets.
/// Defaults carry the published cloud list prices used in the study.
struct PriceSheet {
    struct PerUse {
        std::int64_t writes_free_per_day = 20'000;
        Money write_price_per_op = Money::from_nanos(900); // $0.09 / 100k
        std::int64_t reads_free_per_day = 50'000;
        Money read_price_per_op = Money::from_nanos(300); // $0.03 / 100k
        double storage_free_gb = 1.0;
        Money storage_price_per_gb_month = Money::from_nanos(150'000'000); // $0.15
        double egress_free_gb = 10.0;
        Money egress_price_per_gb = Money::from_nanos(120'000'000); // $0.12
    } per_use;

    struct PerResource {
        Money vcpu_per_month = Money::from_nanos(30'149'000'000); // $30.149
        Money memory_gb_per_month = Money::from_nanos(5'110'000'000); // $5.11
        Money storage_gb_per_month = Money::from_nanos(170'000'000); // $0.17
        Money egress_per_gb = Money::from_nanos(190'000'000); // $0.19
    } per_resource;

    int days_per_month = 30; // the study never states the month length

    static PriceSheet defaults() { return {}; }
    static PriceSheet from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
};

struct UsageProfile {
    std::int64_t writes_per_day = 0;
    std::int64_t reads_per_day = 0;
    int active_days = 1; // days per month on which the operations occur
    double stored_gb = 0.0;
    double egress_gb_month = 0.0;
    int months = 1;

    struct Resources {
        double vcpus = 0.0;
        double memory_gb = 0.0;
        double storage_gb = 0.0;
        double egress_gb = 0.0;
    } resources;

    static UsageProfile from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
};

struct CostLine {
    std::string item;
    std::string detail;
    Money amount;
};

struct CostReport {
    std::string model; // "per_use" | "per_resource"
    std::vector<CostLine> lines;

    Money total() const;
    const CostLine* line(const std::string& item) const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// Serverless billing: daily usage beyond the free tier, summed over the
/// active days of each month, plus storage and egress.
CostReport per_use_cost(const UsageProfile& usage, const PriceSheet& prices);

/// Dedicated-server billing: resource prices independent of operation
/// counts (plus metered egress).
CostReport per_resource_cost(const UsageProfile& usage, const PriceSheet& prices);

struct CrossoverRow {
    std::int64_t ops_per_day; // reads/day == writes/day
    Money per_use;
    Money per_resource;
};

struct CrossoverResult {
    std::vector<CrossoverRow> rows;
    std::optional<std::int64_t> crossover_ops_per_day; // first k where per_use >= per_resource
};

/// Sweeps reads/day = writes/day = 0, step, 2*step, ... max_ops with the
/// operations recurring every day of the month; the per-resource side is
/// constant. Storage and egress carry over from the base profile.
CrossoverResult crossover(const PriceSheet& prices, const UsageProfile& base,
                          std::int64_t step, std::int64_t max_ops);

} // namespace evstore::analytics
