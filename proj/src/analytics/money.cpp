#include "evstore/analytics/money.hpp"

#include <cmath>
#include <cstdio>

namespace evstore::analytics {

Money Money::from_dollars(double dollars) {
    return Money(static_cast<std::int64_t>(std::llround(dollars * 1e9)));
}

double Money::rounded_cents() const {
    const std::int64_t sign = nanos_ < 0 ? -1 : 1;
    const std::int64_t magnitude = sign * nanos_;
    const std::int64_t cents = (magnitude + 5'000'000) / 10'000'000;
    return static_cast<double>(sign * cents) / 100.0;
}

std::string Money::str() const {
    const std::int64_t sign = nanos_ < 0 ? -1 : 1;
    std::int64_t whole = (sign * nanos_) / 1'000'000'000;
    std::int64_t frac = (sign * nanos_) % 1'000'000'000;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%s%lld.%09lld", sign < 0 ? "-" : "",
                  static_cast<long long>(whole), static_cast<long long>(frac));
    std::string s(buf);
    // trim trailing zeros but keep at least two decimals
    const auto dot = s.find('.');
    auto last = s.size();
    while (last > dot + 3 && s[last - 1] == '0') --last;
    return s.substr(0, last);
}

Money Money::scaled(double quantity) const {
    const long double exact = static_cast<long double>(nanos_) * static_cast<long double>(quantity);
    return Money(static_cast<std::int64_t>(std::llroundl(exact)));
}

} // namespace evstore::analytics
