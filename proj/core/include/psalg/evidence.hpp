#ifndef PSALG_EVIDENCE_HPP
#define PSALG_EVIDENCE_HPP

#include "psalg/budget.hpp"
#include "psalg/graphs.hpp"
#include "psalg/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace psalg {

enum class MatroidRelation { Isomorphic, Different, Undetermined };

enum class EvidenceVerdict {
    Consistent,
    /// Equal series but non-isomorphic bridge-free matroids. This only shows a
    /// necessary condition failing to separate them, nothing more.
    PotentialCounterexample,
    /// Isomorphic bridge-free matroids with different series.
    Inconsistent,
    Undetermined,
};

struct BridgeFreeComparison {
    Multigraph bridge_free_a;
    Multigraph bridge_free_b;
    MatroidRelation matroids = MatroidRelation::Undetermined;
    /// Edge k of bridge_free_a corresponds to edge bijection[k] of
    /// bridge_free_b, when one was found or supplied and verified.
    std::optional<std::vector<std::size_t>> bijection;
    HilbertSeries tree_series_a;
    HilbertSeries tree_series_b;
    EvidenceVerdict verdict = EvidenceVerdict::Undetermined;
};

/// Compares the cycle matroids of the bridge-free parts of two connected
/// graphs and their tree-algebra Hilbert series. A supplied bijection is
/// tried first; otherwise bijections are searched exhaustively when the
/// bridge-free parts have at most `search_limit` edges.
BridgeFreeComparison compare_bridge_free(const Multigraph& a, const Multigraph& b,
                                         const std::optional<std::vector<std::size_t>>& bijection = std::nullopt,
                                         std::size_t search_limit = 8, const Budget& budget = default_budget());

std::string to_string(MatroidRelation r);
std::string to_string(EvidenceVerdict v);

}  // namespace psalg

#endif  // PSALG_EVIDENCE_HPP
