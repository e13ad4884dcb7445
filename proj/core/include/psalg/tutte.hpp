#ifndef PSALG_TUTTE_HPP
#define PSALG_TUTTE_HPP

#include "psalg/budget.hpp"
#include "psalg/graphs.hpp"
#include "psalg/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace psalg {

/// Tutte polynomial by deletion-contraction over parallel classes, memoized
/// on canonicalized minors.
BivariatePolynomial tutte_deletion_contraction(const Multigraph& g);

/// Sum over spanning forests F of (x-1)^(c(F)-c(G)) y^act(F).
BivariatePolynomial tutte_activity(const Multigraph& g, const EdgeOrder& order, const Budget& budget = default_budget());

/// Rank of an edge subset given as a bitmask over the ground set.
using RankFunction = std::function<std::size_t(std::uint64_t)>;

/// Sum over all subsets S of (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S)).
BivariatePolynomial tutte_corank_nullity(const RankFunction& rank, std::size_t ground_size,
                                         const Budget& budget = default_budget());

/// r(S) = v - c(V, S) for the graphic matroid of g (at most 63 edges).
RankFunction graphic_rank(const Multigraph& g);

/// Coefficients of T(1+t, 1/t) * t^nullity. Throws InconsistentInput when
/// the result is not a polynomial with nonnegative coefficients.
HilbertSeries forest_hilbert_from_nullity(const BivariatePolynomial& tutte, std::size_t nullity);
/// Coefficients of T(1, 1/t) * t^nullity.
HilbertSeries tree_hilbert_from_nullity(const BivariatePolynomial& tutte, std::size_t nullity);

/// Nullity e - v + c; throws when negative.
HilbertSeries forest_hilbert_from_tutte(const BivariatePolynomial& tutte, std::size_t edges, std::size_t vertices,
                                        std::size_t components);
HilbertSeries tree_hilbert_from_tutte(const BivariatePolynomial& tutte, std::size_t edges, std::size_t vertices,
                                      std::size_t components);

/// Hilbert series of the t-labelled forest algebra, via the forest series of
/// the t-fold clone graph.
HilbertSeries tlabel_hilbert(const Multigraph& g, std::size_t t);

/// Evaluates both sides of
///   T_clone(1 + 1/y, y) = ((y^t-1)/(y-1))^(v-c) T_G((y^(t+1)-1)/(y^(t+1)-y), y^t)
/// exactly at each sample y. Throws on y in {0, 1, -1}.
bool clone_tutte_identity_check(const Multigraph& g, std::size_t t, const std::vector<BigRational>& samples);

/// Checks that sum_k hs[k] y^(t e - v + c - k) equals the right-hand side
/// above at each sample y, i.e. that hs[k] is the coefficient of
/// y^(t e - v + c - k) in that rational function.
bool tlabel_formula_check(const HilbertSeries& hs, const Multigraph& g, std::size_t t,
                          const std::vector<BigRational>& samples);

/// The polynomial sum_F (1 + y + ... + y^(t-1))^e(F) y^(t act(F) + e(F)),
/// read off a t-labelled series of a connected graph on n vertices as
/// sum_k hs[k] y^(t e - k).
UnivariatePolynomial labelled_forest_polynomial(const HilbertSeries& hs, std::size_t t);

/// Recovers the Tutte polynomial of a connected graph on n vertices from the
/// Hilbert series of its t-labelled forest algebra, t >= n.
/// Throws std::invalid_argument when t < n and InconsistentInput when the
/// series cannot come from such a graph.
BivariatePolynomial reconstruct_tutte(const HilbertSeries& hs, std::size_t t, std::size_t n);

}  // namespace psalg

#endif  // PSALG_TUTTE_HPP
