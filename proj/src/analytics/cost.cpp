#include "evstore/analytics/cost.hpp"

#include <algorithm>
#include <sstream>

#include "evstore/core/error.hpp"

namespace evstore::analytics {

using nlohmann::json;
using nlohmann::ordered_json;

PriceSheet PriceSheet::from_json(const json& j) {
    PriceSheet p;
    if (j.contains("per_use")) {
        const auto& u = j.at("per_use");
        auto price = [&](const char* key, Money fallback) {
            return u.contains(key) ? Money::from_dollars(u.at(key).get<double>()) : fallback;
        };
        if (u.contains("writes_free_per_day")) {
            p.per_use.writes_free_per_day = u.at("writes_free_per_day").get<std::int64_t>();
        }
        if (u.contains("reads_free_per_day")) {
            p.per_use.reads_free_per_day = u.at("reads_free_per_day").get<std::int64_t>();
        }
        if (u.contains("storage_free_gb")) {
            p.per_use.storage_free_gb = u.at("storage_free_gb").get<double>();
        }
        if (u.contains("egress_free_gb")) {
            p.per_use.egress_free_gb = u.at("egress_free_gb").get<double>();
        }
        p.per_use.write_price_per_op = price("write_price_per_op", p.per_use.write_price_per_op);
        p.per_use.read_price_per_op = price("read_price_per_op", p.per_use.read_price_per_op);
        p.per_use.storage_price_per_gb_month =
            price("storage_price_per_gb_month", p.per_use.storage_price_per_gb_month);
        p.per_use.egress_price_per_gb =
            price("egress_price_per_gb", p.per_use.egress_price_per_gb);
    }
    if (j.contains("per_resource")) {
        const auto& r = j.at("per_resource");
        auto price = [&](const char* key, Money fallback) {
            return r.contains(key) ? Money::from_dollars(r.at(key).get<double>()) : fallback;
        };
        p.per_resource.vcpu_per_month = price("vcpu_per_month", p.per_resource.vcpu_per_month);
        p.per_resource.memory_gb_per_month =
            price("memory_gb_per_month", p.per_resource.memory_gb_per_month);
        p.per_resource.storage_gb_per_month =
            price("storage_gb_per_month", p.per_resource.storage_gb_per_month);
        p.per_resource.egress_per_gb = price("egress_per_gb", p.per_resource.egress_per_gb);
    }
    if (j.contains("days_per_month")) {
        p.days_per_month = j.at("days_per_month").get<int>();
        if (p.days_per_month < 28 || p.days_per_month > 31) {
            raise(Errc::invalid_value, "days_per_month must be in [28, 31]");
        }
    }
    return p;
}

ordered_json PriceSheet::to_json() const {
    ordered_json j;
    j["per_use"] = {{"writes_free_per_day", per_use.writes_free_per_day},
                    {"write_price_per_op", per_use.write_price_per_op.dollars()},
                    {"reads_free_per_day", per_use.reads_free_per_day},
                    {"read_price_per_op", per_use.read_price_per_op.dollars()},
                    {"storage_free_gb", per_use.storage_free_gb},
                    {"storage_price_per_gb_month", per_use.storage_price_per_gb_month.dollars()},
                    {"egress_free_gb", per_use.egress_free_gb},
                    {"egress_price_per_gb", per_use.egress_price_per_gb.dollars()}};
    j["per_resource"] = {{"vcpu_per_month", per_resource.vcpu_per_month.dollars()},
                         {"memory_gb_per_month", per_resource.memory_gb_per_month.dollars()},
                         {"storage_gb_per_month", per_resource.storage_gb_per_month.dollars()},
                         {"egress_per_gb", per_resource.egress_per_gb.dollars()}};
    j["days_per_month"] = days_per_month;
    return j;
}

UsageProfile UsageProfile::from_json(const json& j) {
    UsageProfile u;
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("writes_per_day", u.writes_per_day);
    get("reads_per_day", u.reads_per_day);
    get("active_days", u.active_days);
    get("stored_gb", u.stored_gb);
    get("egress_gb_month", u.egress_gb_month);
    get("months", u.months);
    if (j.contains("resources")) {
        const auto& r = j.at("resources");
        auto getr = [&](const char* key, double& field) {
            if (r.contains(key)) field = r.at(key).get<double>();
        };
        getr("vcpus", u.resources.vcpus);
        getr("memory_gb", u.resources.memory_gb);
        getr("storage_gb", u.resources.storage_gb);
        getr("egress_gb", u.resources.egress_gb);
    }
    if (u.writes_per_day < 0 || u.reads_per_day < 0 || u.active_days < 0 || u.stored_gb < 0 ||
        u.egress_gb_month < 0 || u.months < 0 || u.resources.vcpus < 0 ||
        u.resources.memory_gb < 0 || u.resources.storage_gb < 0 || u.resources.egress_gb < 0) {
        raise(Errc::invalid_value, "usage profile fields must be non-negative");
    }
    return u;
}

ordered_json UsageProfile::to_json() const {
    ordered_json j;
    j["writes_per_day"] = writes_per_day;
    j["reads_per_day"] = reads_per_day;
    j["active_days"] = active_days;
    j["stored_gb"] = stored_gb;
    j["egress_gb_month"] = egress_gb_month;
    j["months"] = months;
    j["resources"] = {{"vcpus", resources.vcpus},
                      {"memory_gb", resources.memory_gb},
                      {"storage_gb", resources.storage_gb},
                      {"egress_gb", resources.egress_gb}};
    return j;
}

Money CostReport::total() const {
    Money sum;
    for (const auto& line : lines) sum += line.amount;
    return sum;
}

const CostLine* CostReport::line(const std::string& item) const {
    const auto it = std::find_if(lines.begin(), lines.end(),
                                 [&](const CostLine& l) { return l.item == item; });
    return it == lines.end() ? nullptr : &*it;
}

ordered_json CostReport::to_json() const {
    ordered_json j;
    j["model"] = model;
    j["lines"] = ordered_json::array();
    for (const auto& line : lines) {
        j["lines"].push_back({{"item", line.item},
                              {"detail", line.detail},
                              {"amount", line.amount.str()},
                              {"amount_cents", line.amount.rounded_cents()}});
    }
    j["total"] = total().str();
    j["total_cents"] = total().rounded_cents();
    return j;
}

std::string CostReport::to_text() const {
    std::ostringstream out;
    out << "model: " << model << "\n";
    for (const auto& line : lines) {
        out << "  " << line.item << ": $" << line.amount.str();
        if (!line.detail.empty()) out << "  (" << line.detail << ")";
        out << "\n";
    }
    out << "  total: $" << total().str() << "\n";
    return out.str();
}

CostReport per_use_cost(const UsageProfile& usage, const PriceSheet& prices) {
    const auto& p = prices.per_use;
    const std::int64_t billable_writes =
        std::max<std::int64_t>(0, usage.writes_per_day - p.writes_free_per_day);
    const std::int64_t billable_reads =
        std::max<std::int64_t>(0, usage.reads_per_day - p.reads_free_per_day);
    const std::int64_t op_days =
        static_cast<std::int64_t>(usage.active_days) * static_cast<std::int64_t>(usage.months);
    const double billable_storage = std::max(0.0, usage.stored_gb - p.storage_free_gb);
    const double billable_egress = std::max(0.0, usage.egress_gb_month - p.egress_free_gb);

    CostReport report;
    report.model = "per_use";
    report.lines.push_back({"writes",
                            std::to_string(billable_writes) + " billable/day x " +
                                std::to_string(op_days) + " day(s)",
                            p.write_price_per_op * (billable_writes * op_days)});
    report.lines.push_back({"reads",
                            std::to_string(billable_reads) + " billable/day x " +
                                std::to_string(op_days) + " day(s)",
                            p.read_price_per_op * (billable_reads * op_days)});
    report.lines.push_back(
        {"storage", std::to_string(billable_storage) + " billable GB-month",
         p.storage_price_per_gb_month.scaled(billable_storage * usage.months)});
    report.lines.push_back({"ingress", "free", Money{}});
    report.lines.push_back({"egress", std::to_string(billable_egress) + " billable GB/month",
                            p.egress_price_per_gb.scaled(billable_egress * usage.months)});
    return report;
}

CostReport per_resource_cost(const UsageProfile& usage, const PriceSheet& prices) {
    const auto& p = prices.per_resource;
    const auto& r = usage.resources;
    CostReport report;
    report.model = "per_resource";
    report.lines.push_back({"vcpu", std::to_string(r.vcpus) + " vCPU-month",
                            p.vcpu_per_month.scaled(r.vcpus * usage.months)});
    report.lines.push_back({"memory", std::to_string(r.memory_gb) + " GB-month",
                            p.memory_gb_per_month.scaled(r.memory_gb * usage.months)});
    report.lines.push_back({"storage", std::to_string(r.storage_gb) + " GB-month",
                            p.storage_gb_per_month.scaled(r.storage_gb * usage.months)});
    report.lines.push_back({"ingress", "free", Money{}});
    report.lines.push_back({"egress", std::to_string(r.egress_gb) + " GB",
                            p.egress_per_gb.scaled(r.egress_gb * usage.months)});
    return report;
}

CrossoverResult crossover(const PriceSheet& prices, const UsageProfile& base, std::int64_t step,
                          std::int64_t max_ops) {
    if (step <= 0) raise(Errc::invalid_value, "crossover step must be positive");
    const Money fixed = per_resource_cost(base, prices).total();

    CrossoverResult result;
    for (std::int64_t k = 0; k <= max_ops; k += step) {
        UsageProfile sweep = base;
        sweep.writes_per_day = k;
        sweep.reads_per_day = k;
        sweep.active_days = prices.days_per_month; // recurring daily traffic
        sweep.months = 1;
        const Money metered = per_use_cost(sweep, prices).total();
        result.rows.push_back({k, metered, fixed});
        if (!result.crossover_ops_per_day && metered >= fixed) {
            result.crossover_ops_per_day = k;
        }
    }
    return result;
}

} // namespace evstore::analytics
