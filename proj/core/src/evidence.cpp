#include "psalg/evidence.hpp"

#include "psalg/gf2.hpp"
#include "psalg/nilalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace psalg {

namespace {

HilbertSeries tree_series(const Multigraph& g, const Budget& budget) {
    return subalgebra_hilbert(TruncatedAlgebra::tree(g), graph_linear_forms(g), {}, budget);
}

std::size_t cycle_rank(const Multigraph& g) {
    return g.edge_count() + component_count(g) - g.vertex_count();
}

bool invariants_differ(const Multigraph& a, const Multigraph& b) {
    return a.edge_count() != b.edge_count() || cycle_rank(a) != cycle_rank(b);
}

}  // namespace

BridgeFreeComparison compare_bridge_free(const Multigraph& a, const Multigraph& b,
                                         const std::optional<std::vector<std::size_t>>& bijection,
                                         std::size_t search_limit, const Budget& budget) {
    if (component_count(a) != 1 || component_count(b) != 1)
        throw std::invalid_argument("compare_bridge_free: both graphs must be connected");
    BridgeFreeComparison out;
    out.bridge_free_a = bridge_free(a);
    out.bridge_free_b = bridge_free(b);
    out.tree_series_a = tree_series(a, budget);
    out.tree_series_b = tree_series(b, budget);
    const Multigraph& fa = out.bridge_free_a;
    const Multigraph& fb = out.bridge_free_b;

    if (invariants_differ(fa, fb)) {
        out.matroids = MatroidRelation::Different;
    } else if (bijection && same_cycle_space(fa, fb, *bijection)) {
        out.matroids = MatroidRelation::Isomorphic;
        out.bijection = bijection;
    } else if (fa.edge_count() <= search_limit) {
        const Gf2Matrix ca = cycle_space(fa), cb = cycle_space(fb);
        std::vector<std::size_t> perm(fa.edge_count());
        std::iota(perm.begin(), perm.end(), 0);
        out.matroids = MatroidRelation::Different;
        do {
            if (ca.relabel_columns(perm).same_row_space(cb)) {
                out.matroids = MatroidRelation::Isomorphic;
                out.bijection = perm;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    const bool equal_series = out.tree_series_a == out.tree_series_b;
    switch (out.matroids) {
    case MatroidRelation::Isomorphic:
        out.verdict = equal_series ? EvidenceVerdict::Consistent : EvidenceVerdict::Inconsistent;
        break;
    case MatroidRelation::Different:
        out.verdict = equal_series ? EvidenceVerdict::PotentialCounterexample : EvidenceVerdict::Consistent;
        break;
    case MatroidRelation::Undetermined:
        out.verdict = EvidenceVerdict::Undetermined;
        break;
    }
    return out;
}

std::string to_string(MatroidRelation r) {
    switch (r) {
    case MatroidRelation::Isomorphic: return "isomorphic";
    case MatroidRelation::Different: return "different";
    case MatroidRelation::Undetermined: return "undetermined";
    }
    return "undetermined";
}

std::string to_string(EvidenceVerdict v) {
    switch (v) {
    case EvidenceVerdict::Consistent: return "consistent";
    case EvidenceVerdict::PotentialCounterexample: return "POTENTIAL-COUNTEREXAMPLE";
    case EvidenceVerdict::Inconsistent: return "INCONSISTENT";
    case EvidenceVerdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

}  // namespace psalg
