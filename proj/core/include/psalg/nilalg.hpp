#ifndef PSALG_NILALG_HPP
#define PSALG_NILALG_HPP

#include "psalg/budget.hpp"
#include "psalg/exactalg.hpp"
#include "psalg/graphs.hpp"
#include "psalg/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace psalg {

/// Exponent vector of a monomial, one entry per variable.
using Exponent = std::vector<std::uint8_t>;

/// Commutative algebra on variables phi_0..phi_{m-1} with phi^(cap+1) = 0 and
/// with every monomial whose support contains a forbidden support set to 0.
class TruncatedAlgebra {
public:
    /// Forbidden supports are bitmasks over the variables (so m <= 64); only
    /// the inclusion-minimal ones are kept.
    explicit TruncatedAlgebra(std::size_t variable_count, unsigned cap = 1,
                              std::vector<std::uint64_t> forbidden_supports = {});

    /// Edge variables of g with cap t.
    static TruncatedAlgebra forest(const Multigraph& g, unsigned cap = 1);
    /// Edge variables of g, cap 1, every cut forbidden.
    static TruncatedAlgebra tree(const Multigraph& g);

    std::size_t variable_count() const noexcept { return m_; }
    unsigned cap() const noexcept { return cap_; }
    const std::vector<std::uint64_t>& forbidden_supports() const noexcept { return forbidden_; }

    bool is_basis(const Exponent& alpha) const;

    friend bool operator==(const TruncatedAlgebra&, const TruncatedAlgebra&) = default;

private:
    std::size_t m_;
    unsigned cap_;
    std::vector<std::uint64_t> forbidden_;
};

/// Generators X_i = sum_e c(i, e) phi_e. A nonzero modulus means the
/// coefficients are residues mod that prime and ranks are taken there.
class LinearFormFamily {
public:
    LinearFormFamily() = default;
    LinearFormFamily(std::size_t generator_count, std::size_t variable_count, std::uint64_t modulus = 0)
        : c_(generator_count, variable_count), modulus_(modulus) {}
    static LinearFormFamily from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t variable_count,
                                      std::uint64_t modulus = 0);

    std::size_t generator_count() const noexcept { return c_.rows(); }
    std::size_t variable_count() const noexcept { return c_.cols(); }
    std::uint64_t modulus() const noexcept { return modulus_; }

    BigInt& operator()(std::size_t i, std::size_t e) { return c_(i, e); }
    const BigInt& operator()(std::size_t i, std::size_t e) const { return c_(i, e); }
    const Matrix<BigInt>& coefficients() const noexcept { return c_; }

private:
    Matrix<BigInt> c_;
    std::uint64_t modulus_ = 0;
};

/// Sparse element of a TruncatedAlgebra with integer coefficients.
class AlgebraElement {
public:
    using Terms = std::map<Exponent, BigInt>;

    explicit AlgebraElement(TruncatedAlgebra host) : host_(std::move(host)) {}
    static AlgebraElement one(const TruncatedAlgebra& host);
    static AlgebraElement variable(const TruncatedAlgebra& host, std::size_t e, const BigInt& c = 1);
    /// X_i of the family, as an element of `host`.
    static AlgebraElement generator(const TruncatedAlgebra& host, const LinearFormFamily& forms, std::size_t i);

    const TruncatedAlgebra& host() const noexcept { return host_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * phi^alpha; non-basis monomials are zero and ignored.
    void add_term(const Exponent& alpha, const BigInt& c);
    AlgebraElement& operator+=(const AlgebraElement& other);

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    TruncatedAlgebra host_;
    Terms terms_;
};

/// Throws std::invalid_argument when the hosts differ.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// Graded dimensions of the subalgebra generated by the X_i.
HilbertSeries subalgebra_hilbert(const TruncatedAlgebra& alg, const LinearFormFamily& forms,
                                 const RankPolicy& policy = {}, const Budget& budget = default_budget());

/// A power ell^power of the linear form sum_j form[j] x_j.
struct PowerGenerator {
    std::vector<BigInt> form;
    std::size_t power = 1;
};

struct QuotientOptions {
    /// Substitute away the variables pinned by degree-1 generators first.
    bool eliminate_linear = true;
    RankPolicy policy{};
};

/// Graded dimensions of K[x_1..x_n] / (generators).
HilbertSeries quotient_hilbert(std::size_t n, const std::vector<PowerGenerator>& generators,
                               const QuotientOptions& options = {}, const Budget& budget = default_budget());

/// Number of edges with exactly one endpoint in `subset`.
std::size_t boundary_degree(const Multigraph& g, const std::vector<std::size_t>& subset);

/// Row per vertex: +1 at the smaller endpoint of each edge, -1 at the larger.
LinearFormFamily graph_linear_forms(const Multigraph& g);

/// (sum_{i in I} x_i)^(t D_I + 1) for every nonempty vertex subset I.
std::vector<PowerGenerator> graph_quotient_generators(const Multigraph& g, std::size_t t = 1);

/// (sum_{i in I} x_i)^(D_I) for proper nonempty I, plus x_1 + ... + x_n.
/// Requires a connected graph.
std::vector<PowerGenerator> graph_tree_quotient_generators(const Multigraph& g);

/// Row i is (a_{k,i})_k: generator i reads coordinate i of every vector.
LinearFormFamily vector_configuration_forms(std::size_t dimension, const std::vector<std::vector<BigInt>>& vectors);

}  // namespace psalg

#endif  // PSALG_NILALG_HPP
