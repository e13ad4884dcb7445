#include "psalg/nilalg.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <numeric>
#include <string>

namespace psalg {

namespace {

std::uint64_t support_mask(const Exponent& alpha) {
    std::uint64_t mask = 0;
    for (std::size_t e = 0; e < alpha.size(); ++e)
        if (alpha[e]) mask |= std::uint64_t{1} << e;
    return mask;
}

std::string sizing_report(const char* what, std::size_t degree, std::size_t rows, std::size_t cols,
                          const Budget& budget) {
    return std::string(what) + ": degree " + std::to_string(degree) + " needs a " + std::to_string(rows) + " x " +
           std::to_string(cols) + " matrix, basis budget is " + std::to_string(budget.max_basis) +
           " (raise it with PSALG_BUDGET=basis=N)";
}

using SparseRow = std::map<Exponent, BigInt>;

// Rows over a shared, sorted column set.
Matrix<BigInt> to_matrix(const std::vector<SparseRow>& rows, std::map<Exponent, std::size_t>& columns) {
    columns.clear();
    for (const SparseRow& r : rows)
        for (const auto& [alpha, c] : r) columns.emplace(alpha, 0);
    std::size_t next = 0;
    for (auto& [alpha, idx] : columns) idx = next++;
    Matrix<BigInt> m(rows.size(), columns.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [alpha, c] : rows[i]) m(i, columns.at(alpha)) = c;
    return m;
}

BigInt binomial(std::size_t n, std::size_t k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace

TruncatedAlgebra::TruncatedAlgebra(std::size_t variable_count, unsigned cap, std::vector<std::uint64_t> forbidden)
    : m_(variable_count), cap_(cap) {
    if (cap == 0 || cap > 255) throw std::invalid_argument("TruncatedAlgebra: cap must be in [1, 255]");
    if (variable_count > 64) throw std::invalid_argument("TruncatedAlgebra: at most 64 variables");
    const std::uint64_t all = variable_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << variable_count) - 1;
    for (std::uint64_t f : forbidden)
        if (f & ~all) throw std::invalid_argument("TruncatedAlgebra: forbidden support out of range");
    std::sort(forbidden.begin(), forbidden.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b; });
    forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
    for (std::uint64_t f : forbidden) {
        bool minimal = std::none_of(forbidden_.begin(), forbidden_.end(), [f](std::uint64_t g) { return (g & f) == g; });
        if (minimal) forbidden_.push_back(f);
    }
}

TruncatedAlgebra TruncatedAlgebra::forest(const Multigraph& g, unsigned cap) {
    return TruncatedAlgebra(g.edge_count(), cap);
}

TruncatedAlgebra TruncatedAlgebra::tree(const Multigraph& g) {
    if (g.edge_count() > 64) throw std::invalid_argument("TruncatedAlgebra::tree: at most 64 edges");
    std::vector<std::uint64_t> masks;
    for (const EdgeSet& cut : minimal_cuts(g)) {
        std::uint64_t mask = 0;
        for (std::size_t e : cut) mask |= std::uint64_t{1} << e;
        masks.push_back(mask);
    }
    return TruncatedAlgebra(g.edge_count(), 1, std::move(masks));
}

bool TruncatedAlgebra::is_basis(const Exponent& alpha) const {
    if (alpha.size() != m_) return false;
    for (std::uint8_t a : alpha)
        if (a > cap_) return false;
    if (forbidden_.empty()) return true;
    const std::uint64_t support = support_mask(alpha);
    return std::none_of(forbidden_.begin(), forbidden_.end(), [support](std::uint64_t f) { return (support & f) == f; });
}

LinearFormFamily LinearFormFamily::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t variable_count,
                                             std::uint64_t modulus) {
    LinearFormFamily out(rows.size(), variable_count, modulus);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != variable_count)
            throw std::invalid_argument("LinearFormFamily: row " + std::to_string(i) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(variable_count));
        for (std::size_t e = 0; e < variable_count; ++e) out(i, e) = rows[i][e];
    }
    return out;
}

AlgebraElement AlgebraElement::one(const TruncatedAlgebra& host) {
    AlgebraElement out(host);
    out.add_term(Exponent(host.variable_count(), 0), 1);
    return out;
}

AlgebraElement AlgebraElement::variable(const TruncatedAlgebra& host, std::size_t e, const BigInt& c) {
    if (e >= host.variable_count()) throw std::out_of_range("AlgebraElement::variable: index out of range");
    AlgebraElement out(host);
    Exponent alpha(host.variable_count(), 0);
    alpha[e] = 1;
    out.add_term(alpha, c);
    return out;
}

AlgebraElement AlgebraElement::generator(const TruncatedAlgebra& host, const LinearFormFamily& forms, std::size_t i) {
    if (forms.variable_count() != host.variable_count())
        throw std::invalid_argument("AlgebraElement::generator: form and algebra sizes differ");
    AlgebraElement out(host);
    for (std::size_t e = 0; e < forms.variable_count(); ++e)
        if (sgn(forms(i, e)) != 0) out += variable(host, e, forms(i, e));
    return out;
}

void AlgebraElement::add_term(const Exponent& alpha, const BigInt& c) {
    if (sgn(c) == 0 || !host_.is_basis(alpha)) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    if (!(host_ == other.host_)) throw std::invalid_argument("AlgebraElement: host algebras differ");
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.host() == b.host())) throw std::invalid_argument("multiply: host algebras differ");
    AlgebraElement out(a.host());
    const unsigned cap = a.host().cap();
    Exponent gamma(a.host().variable_count());
    for (const auto& [alpha, ca] : a.terms())
        for (const auto& [beta, cb] : b.terms()) {
            bool over = false;
            for (std::size_t e = 0; e < gamma.size() && !over; ++e) {
                unsigned s = unsigned{alpha[e]} + beta[e];
                over = s > cap;
                gamma[e] = static_cast<std::uint8_t>(s);
            }
            if (!over) out.add_term(gamma, ca * cb);
        }
    return out;
}

HilbertSeries subalgebra_hilbert(const TruncatedAlgebra& alg, const LinearFormFamily& forms, const RankPolicy& policy,
                                 const Budget& budget) {
    if (forms.variable_count() != alg.variable_count())
        throw std::invalid_argument("subalgebra_hilbert: forms have " + std::to_string(forms.variable_count()) +
                                    " variables, algebra has " + std::to_string(alg.variable_count()));
    RankPolicy rp = policy;
    if (forms.modulus() != 0) rp.fixed_modulus = forms.modulus();
    std::optional<PrimeField> field;
    if (rp.fixed_modulus != 0) field.emplace(rp.fixed_modulus);

    const std::size_t n = forms.generator_count(), m = alg.variable_count();
    std::vector<SparseRow> generators(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t e = 0; e < m; ++e) {
            BigInt c = forms(i, e);
            if (field) c = BigInt(static_cast<unsigned long>(field->reduce(c)));
            if (sgn(c) == 0) continue;
            Exponent alpha(m, 0);
            alpha[e] = 1;
            if (alg.is_basis(alpha)) generators[i][alpha] = c;
        }

    std::vector<std::uint64_t> dims{1};
    // basis: independent elements spanning the current graded component.
    std::vector<SparseRow> basis{SparseRow{{Exponent(m, 0), BigInt(1)}}};
    const unsigned cap = alg.cap();
    for (std::size_t k = 1;; ++k) {
        if (k > budget.max_degree) throw BudgetExceeded("subalgebra_hilbert: degree exceeds " +
                                                        std::to_string(budget.max_degree));
        // C_k = span{X_i * b : b spans C_{k-1}}.
        std::vector<SparseRow> candidates;
        candidates.reserve(n * basis.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (generators[i].empty()) continue;
            for (const SparseRow& b : basis) {
                SparseRow prod;
                for (const auto& [alpha, ca] : generators[i]) {
                    const std::size_t e = static_cast<std::size_t>(std::find(alpha.begin(), alpha.end(), 1) - alpha.begin());
                    for (const auto& [beta, cb] : b) {
                        if (unsigned{beta[e]} + 1 > cap) continue;
                        Exponent gamma = beta;
                        ++gamma[e];
                        if (!alg.is_basis(gamma)) continue;
                        BigInt v = ca * cb;
                        auto [it, inserted] = prod.try_emplace(std::move(gamma), v);
                        if (!inserted) it->second += v;
                    }
                }
                for (auto it = prod.begin(); it != prod.end();) {
                    if (field) it->second = BigInt(static_cast<unsigned long>(field->reduce(it->second)));
                    it = sgn(it->second) == 0 ? prod.erase(it) : std::next(it);
                }
                if (!prod.empty()) candidates.push_back(std::move(prod));
            }
        }
        std::map<Exponent, std::size_t> columns;
        Matrix<BigInt> mat = to_matrix(candidates, columns);
        if (columns.size() > budget.max_basis)
            throw BudgetExceeded(sizing_report("subalgebra_hilbert", k, mat.rows(), mat.cols(), budget));
        std::vector<std::size_t> picked = independent_rows(mat, rp);
        // Generated in degree 1: C_k = 0 forces C_{k+1} = X * C_k = 0.
        if (picked.empty()) break;
        std::vector<SparseRow> next;
        next.reserve(picked.size());
        for (std::size_t r : picked) next.push_back(std::move(candidates[r]));
        basis = std::move(next);
        dims.push_back(basis.size());
    }
    return HilbertSeries(std::move(dims));
}

namespace {

// Linear forms over the reduced variables after eliminating the span of the
// degree-1 generators. Returns the number of surviving variables.
std::size_t eliminate_linear(std::size_t n, std::vector<PowerGenerator>& gens) {
    std::vector<std::vector<BigRational>> rref;  // rows with a leading 1
    std::vector<std::size_t> pivots;
    for (const PowerGenerator& g : gens) {
        if (g.power != 1) continue;
        std::vector<BigRational> v(g.form.begin(), g.form.end());
        for (std::size_t r = 0; r < rref.size(); ++r) {
            if (sgn(v[pivots[r]]) == 0) continue;
            BigRational f = v[pivots[r]];
            for (std::size_t c = 0; c < n; ++c) v[c] -= f * rref[r][c];
        }
        std::size_t lead = 0;
        while (lead < n && sgn(v[lead]) == 0) ++lead;
        if (lead == n) continue;
        BigRational s = v[lead];
        for (auto& x : v) x /= s;
        for (std::size_t r = 0; r < rref.size(); ++r) {
            if (sgn(rref[r][lead]) == 0) continue;
            BigRational f = rref[r][lead];
            for (std::size_t c = 0; c < n; ++c) rref[r][c] -= f * v[c];
        }
        rref.push_back(std::move(v));
        pivots.push_back(lead);
    }
    if (rref.empty()) return n;

    std::vector<std::size_t> free_index(n, n);
    std::size_t kept = 0;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_index[c] = kept++;

    // In the quotient x_p = -sum_f rref[p][f] x_f for each pivot p.
    std::vector<PowerGenerator> out;
    for (const PowerGenerator& g : gens) {
        if (g.power == 1) continue;
        std::vector<BigRational> w(kept);
        for (std::size_t c = 0; c < n; ++c) {
            if (sgn(g.form[c]) == 0) continue;
            if (free_index[c] != n) {
                w[free_index[c]] += g.form[c];
                continue;
            }
            const auto& row = rref[static_cast<std::size_t>(std::find(pivots.begin(), pivots.end(), c) - pivots.begin())];
            for (std::size_t f = 0; f < n; ++f)
                if (free_index[f] != n && sgn(row[f]) != 0) w[free_index[f]] -= BigRational(g.form[c]) * row[f];
        }
        BigInt lcm = 1;
        for (const auto& x : w) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        PowerGenerator h{std::vector<BigInt>(kept), g.power};
        bool nonzero = false;
        for (std::size_t f = 0; f < kept; ++f) {
            BigRational scaled = w[f] * lcm;
            h.form[f] = scaled.get_num();
            nonzero |= sgn(h.form[f]) != 0;
        }
        if (nonzero) out.push_back(std::move(h));
    }
    gens = std::move(out);
    return kept;
}

// All exponent vectors of total degree k in n variables, lexicographic.
void monomials_of_degree(std::size_t n, std::size_t k, std::map<Exponent, std::size_t>& index) {
    index.clear();
    if (n == 0) {
        if (k == 0) index.emplace(Exponent{}, 0);
        return;
    }
    Exponent alpha(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
        if (pos + 1 == n) {
            alpha[pos] = static_cast<std::uint8_t>(left);
            index.emplace(alpha, 0);
            return;
        }
        for (std::size_t a = 0; a <= left; ++a) {
            alpha[pos] = static_cast<std::uint8_t>(a);
            rec(pos + 1, left - a);
        }
    };
    rec(0, k);
    std::size_t next = 0;
    for (auto& [a, idx] : index) idx = next++;
}

// ell^d as a sparse polynomial, by repeated multiplication.
SparseRow power_of_form(const std::vector<BigInt>& form, std::size_t d) {
    const std::size_t n = form.size();
    SparseRow acc{{Exponent(n, 0), BigInt(1)}};
    for (std::size_t step = 0; step < d; ++step) {
        SparseRow next;
        for (const auto& [alpha, c] : acc)
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(form[j]) == 0) continue;
                Exponent beta = alpha;
                ++beta[j];
                next[beta] += c * form[j];
            }
        for (auto it = next.begin(); it != next.end();) it = sgn(it->second) == 0 ? next.erase(it) : std::next(it);
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

HilbertSeries quotient_hilbert(std::size_t n, const std::vector<PowerGenerator>& generators,
                               const QuotientOptions& options, const Budget& budget) {
    std::vector<PowerGenerator> gens;
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (generators[g].form.size() != n)
            throw std::invalid_argument("quotient_hilbert: generator " + std::to_string(g) + " has " +
                                        std::to_string(generators[g].form.size()) + " coefficients, expected " +
                                        std::to_string(n));
        if (generators[g].power == 0) throw std::invalid_argument("quotient_hilbert: generator powers must be >= 1");
        if (generators[g].power > 255) throw BudgetExceeded("quotient_hilbert: generator power exceeds 255");
        if (std::any_of(generators[g].form.begin(), generators[g].form.end(), [](const BigInt& c) { return sgn(c) != 0; }))
            gens.push_back(generators[g]);
    }
    std::size_t vars = n;
    if (options.eliminate_linear) vars = eliminate_linear(n, gens);

    std::vector<std::uint64_t> dims{1};
    std::vector<SparseRow> basis;  // spans I_{k-1}
    std::map<Exponent, std::size_t> columns;
    for (std::size_t k = 1;; ++k) {
        if (k > budget.max_degree)
            throw BudgetExceeded("quotient_hilbert: no zero graded component up to degree " +
                                 std::to_string(budget.max_degree) + "; the quotient may be infinite-dimensional");
        const BigInt total = binomial(vars + k - 1, k);
        if (total == 0) break;
        if (total > budget.max_basis)
            throw BudgetExceeded("quotient_hilbert: degree " + std::to_string(k) + " has " + total.get_str() +
                                 " monomials, basis budget is " + std::to_string(budget.max_basis));
        // I_k = x * I_{k-1} + span{ell^k : generators of power k}.
        std::vector<SparseRow> candidates;
        for (const SparseRow& b : basis)
            for (std::size_t j = 0; j < vars; ++j) {
                SparseRow shifted;
                for (const auto& [alpha, c] : b) {
                    Exponent beta = alpha;
                    if (beta[j] == 255) throw BudgetExceeded("quotient_hilbert: exponent exceeds 255");
                    ++beta[j];
                    shifted.emplace(std::move(beta), c);
                }
                candidates.push_back(std::move(shifted));
            }
        for (const PowerGenerator& g : gens)
            if (g.power == k) candidates.push_back(power_of_form(g.form, k));

        monomials_of_degree(vars, k, columns);
        Matrix<BigInt> mat(candidates.size(), columns.size());
        for (std::size_t r = 0; r < candidates.size(); ++r)
            for (const auto& [alpha, c] : candidates[r]) mat(r, columns.at(alpha)) = c;
        std::vector<std::size_t> picked = independent_rows(mat, options.policy);
        std::vector<SparseRow> next;
        next.reserve(picked.size());
        for (std::size_t r : picked) next.push_back(std::move(candidates[r]));
        basis = std::move(next);

        const std::uint64_t dim = total.get_ui() - basis.size();
        // Generated in degree 1: B_k = 0 forces B_{k+1} = x * B_k = 0.
        if (dim == 0) break;
        dims.push_back(dim);
    }
    return HilbertSeries(std::move(dims));
}

std::size_t boundary_degree(const Multigraph& g, const std::vector<std::size_t>& subset) {
    if (subset.empty()) throw std::invalid_argument("boundary_degree: empty vertex subset");
    std::vector<bool> in(g.vertex_count(), false);
    for (std::size_t v : subset) {
        if (v >= g.vertex_count()) throw std::out_of_range("boundary_degree: vertex " + std::to_string(v) + " out of range");
        in[v] = true;
    }
    std::size_t d = 0;
    for (const Edge& e : g.edges()) d += in[e.u] != in[e.v];
    return d;
}

LinearFormFamily graph_linear_forms(const Multigraph& g) {
    LinearFormFamily forms(g.vertex_count(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        forms(std::min(ed.u, ed.v), e) = 1;
        forms(std::max(ed.u, ed.v), e) = -1;
    }
    return forms;
}

namespace {

std::vector<std::size_t> members(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; mask; ++v, mask >>= 1)
        if (mask & 1U) out.push_back(v);
    return out;
}

std::vector<BigInt> indicator(std::size_t n, std::uint64_t mask) {
    std::vector<BigInt> form(n);
    for (std::size_t v = 0; v < n; ++v)
        if ((mask >> v) & 1U) form[v] = 1;
    return form;
}

}  // namespace

std::vector<PowerGenerator> graph_quotient_generators(const Multigraph& g, std::size_t t) {
    if (t == 0) throw std::invalid_argument("graph_quotient_generators: t must be >= 1");
    const std::size_t n = g.vertex_count();
    require_enumerable(n, default_budget(), "graph_quotient_generators (vertex subsets)");
    std::vector<PowerGenerator> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        out.push_back({indicator(n, mask), t * boundary_degree(g, members(mask)) + 1});
    return out;
}

std::vector<PowerGenerator> graph_tree_quotient_generators(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    if (component_count(g) != 1)
        throw std::invalid_argument("graph_tree_quotient_generators: graph must be connected");
    require_enumerable(n, default_budget(), "graph_tree_quotient_generators (vertex subsets)");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<PowerGenerator> out;
    for (std::uint64_t mask = 1; mask < full; ++mask)
        out.push_back({indicator(n, mask), boundary_degree(g, members(mask))});
    out.push_back({indicator(n, full), 1});
    return out;
}

LinearFormFamily vector_configuration_forms(std::size_t dimension, const std::vector<std::vector<BigInt>>& vectors) {
    LinearFormFamily forms(dimension, vectors.size());
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (vectors[k].size() != dimension)
            throw std::invalid_argument("vector_configuration_forms: vector " + std::to_string(k) + " has dimension " +
                                        std::to_string(vectors[k].size()) + ", expected " + std::to_string(dimension));
        for (std::size_t i = 0; i < dimension; ++i) forms(i, k) = vectors[k][i];
    }
    return forms;
}

}  // namespace psalg
