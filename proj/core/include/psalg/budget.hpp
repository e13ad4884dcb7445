#ifndef PSALG_BUDGET_HPP
#define PSALG_BUDGET_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace psalg {

/// Raised when a computation would exceed a configured size limit. The
/// message carries a sizing report.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when inputs are mutually inconsistent (e.g. a Hilbert series that
/// cannot come from any graph with the stated parameters).
class InconsistentInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Budget {
    /// Maximum number of monomials in one graded component.
    std::size_t max_basis = std::size_t{1} << 20;
    /// Maximum ground-set size for exhaustive subset enumeration.
    std::size_t enumeration_cap = 24;
    /// Maximum graded degree explored before a quotient is declared infinite.
    std::size_t max_degree = 4096;
};

/// Parses "basis=N,edges=M,degree=D" (any subset, any order) or a bare
/// integer N, which sets the basis budget.
Budget parse_budget(std::string_view text, Budget base = {});

/// Defaults overridden by the PSALG_BUDGET environment variable, read once.
const Budget& default_budget();

/// Throws BudgetExceeded when `ground` exceeds the enumeration cap.
void require_enumerable(std::size_t ground, const Budget& budget, std::string_view what);

}  // namespace psalg

#endif  // PSALG_BUDGET_HPP
