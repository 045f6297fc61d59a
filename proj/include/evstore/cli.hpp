#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evstore::cli {

/// Runtime defaults, overridable per flag. Loaded from the JSON file named
/// by EVSTORE_CONFIG when the variable is set.
struct Config {
    std::uint64_t default_seed = 1;
    std::vector<std::size_t> default_sizes = {10, 100, 1'000, 10'000, 100'000, 1'000'000};
    std::string price_sheet_path;
    std::string out_dir;
    int month_days = 30;
    int geohash_precision = 6;

    static Config from_environment();
};

/// Dispatches one command line. Data goes to out, error text to err.
/// Returns 0 on success, 1 on a usage error, 2 on a domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace evstore::cli
