#include "psalg/budget.hpp"

#include <charconv>
#include <cstdlib>

namespace psalg {

namespace {

std::size_t parse_size(std::string_view text) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument("PSALG_BUDGET: bad number '" + std::string(text) + "'");
    return value;
}

}  // namespace

Budget parse_budget(std::string_view text, Budget base) {
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            base.max_basis = parse_size(item);
            continue;
        }
        std::string_view key = item.substr(0, eq);
        std::size_t value = parse_size(item.substr(eq + 1));
        if (key == "basis") {
            base.max_basis = value;
        } else if (key == "edges") {
            if (value > 63) throw std::invalid_argument("PSALG_BUDGET: edges cap must be <= 63");
            base.enumeration_cap = value;
        } else if (key == "degree") {
            base.max_degree = value;
        } else {
            throw std::invalid_argument("PSALG_BUDGET: unknown key '" + std::string(key) + "'");
        }
    }
    return base;
}

const Budget& default_budget() {
    static const Budget budget = [] {
        const char* env = std::getenv("PSALG_BUDGET");
        return env ? parse_budget(env) : Budget{};
    }();
    return budget;
}

void require_enumerable(std::size_t ground, const Budget& budget, std::string_view what) {
    if (ground > budget.enumeration_cap)
        throw BudgetExceeded(std::string(what) + ": ground set of " + std::to_string(ground) +
                             " elements exceeds the enumeration cap of " +
                             std::to_string(budget.enumeration_cap) + " (set PSALG_BUDGET=edges=N)");
}

}  // namespace psalg
