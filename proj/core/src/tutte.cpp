#include "psalg/tutte.hpp"

#include "detail/disjoint_sets.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

namespace psalg {

namespace {

// Loopless multigraph minor as a symmetric multiplicity matrix.
struct Minor {
    std::size_t n = 0;
    std::vector<std::uint32_t> mult;  // n*n, symmetric, zero diagonal

    std::uint32_t at(std::size_t a, std::size_t b) const { return mult[a * n + b]; }
    std::uint32_t& at(std::size_t a, std::size_t b) { return mult[a * n + b]; }

    std::uint64_t degree(std::size_t a) const {
        std::uint64_t d = 0;
        for (std::size_t b = 0; b < n; ++b) d += at(a, b);
        return d;
    }

    Minor induced(const std::vector<std::size_t>& verts) const {
        Minor m{verts.size(), std::vector<std::uint32_t>(verts.size() * verts.size())};
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = 0; j < verts.size(); ++j) m.at(i, j) = at(verts[i], verts[j]);
        return m;
    }
};

constexpr std::size_t kCanonicalPermutationBudget = 720;

class DeletionContraction {
public:
    BivariatePolynomial solve(const Minor& g) {
        // Isolated vertices do not change T; drop them and split components.
        std::vector<std::size_t> live;
        for (std::size_t a = 0; a < g.n; ++a)
            if (g.degree(a) > 0) live.push_back(a);
        if (live.size() < 2) return BivariatePolynomial::constant(1);
        Minor h = live.size() == g.n ? g : g.induced(live);

        detail::DisjointSets sets(h.n);
        for (std::size_t a = 0; a < h.n; ++a)
            for (std::size_t b = a + 1; b < h.n; ++b)
                if (h.at(a, b)) sets.unite(a, b);
        if (sets.components() > 1) {
            std::map<std::size_t, std::vector<std::size_t>> parts;
            for (std::size_t a = 0; a < h.n; ++a) parts[sets.find(a)].push_back(a);
            BivariatePolynomial product = BivariatePolynomial::constant(1);
            for (const auto& [root, verts] : parts) product = product * connected(h.induced(verts));
            return product;
        }
        return connected(h);
    }

private:
    BivariatePolynomial connected(const Minor& g) {
        std::string key = canonical_key(g);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // Contract/delete a whole parallel class at a minimum-degree vertex.
        std::size_t a = 0;
        for (std::size_t v = 1; v < g.n; ++v)
            if (g.degree(v) < g.degree(a)) a = v;
        std::size_t b = 0;
        while (b == a || g.at(a, b) == 0) ++b;
        const std::uint32_t k = g.at(a, b);

        Minor deleted = g;
        deleted.at(a, b) = deleted.at(b, a) = 0;

        Minor contracted{g.n - 1, std::vector<std::uint32_t>((g.n - 1) * (g.n - 1))};
        auto map = [&](std::size_t v) { return v == b ? (a < b ? a : a - 1) : (v > b ? v - 1 : v); };
        for (std::size_t u = 0; u < g.n; ++u)
            for (std::size_t w = 0; w < g.n; ++w) {
                if (u == w || (u == a && w == b) || (u == b && w == a)) continue;
                std::size_t mu = map(u), mw = map(w);
                if (mu != mw) contracted.at(mu, mw) += g.at(u, w);
            }

        // The other k-1 edges of the class become loops after contracting one.
        BivariatePolynomial geometric;  // 1 + y + ... + y^(k-1)
        for (std::uint32_t j = 0; j < k; ++j) geometric.add_term(0, j, 1);
        BivariatePolynomial c_part = solve(contracted);

        BivariatePolynomial result;
        if (is_cut(deleted, a, b)) {
            // T = (x + y + ... + y^(k-1)) T(G / class)
            result = (geometric - BivariatePolynomial::constant(1) + BivariatePolynomial::x()) * c_part;
        } else {
            result = solve(deleted) + geometric * c_part;
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    static bool is_cut(const Minor& g, std::size_t a, std::size_t b) {
        std::vector<bool> seen(g.n, false);
        std::vector<std::size_t> stack{a};
        seen[a] = true;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y = 0; y < g.n; ++y)
                if (g.at(x, y) && !seen[y]) seen[y] = true, stack.push_back(y);
        }
        return !seen[b];
    }

    // Vertices sorted by degree, then the lexicographically least matrix over
    // permutations inside equal-degree blocks. Over budget, ties keep their
    // input order: still a complete description, only with less sharing.
    static std::string canonical_key(const Minor& g) {
        std::vector<std::size_t> order(g.n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::vector<std::uint64_t> deg(g.n);
        for (std::size_t a = 0; a < g.n; ++a) deg[a] = g.degree(a);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return deg[p] < deg[q]; });

        std::vector<std::pair<std::size_t, std::size_t>> blocks;
        std::size_t permutations = 1;
        for (std::size_t i = 0; i < g.n;) {
            std::size_t j = i;
            while (j < g.n && deg[order[j]] == deg[order[i]]) ++j;
            blocks.push_back({i, j});
            for (std::size_t f = 2; f <= j - i && permutations <= kCanonicalPermutationBudget; ++f) permutations *= f;
            i = j;
        }

        auto encode = [&](const std::vector<std::size_t>& ord) {
            std::string s;
            s.reserve(g.n * (g.n - 1) / 2 * 4 + 8);
            s += std::to_string(g.n) + ":";
            for (std::size_t i = 0; i < g.n; ++i)
                for (std::size_t j = i + 1; j < g.n; ++j) {
                    std::uint32_t m = g.at(ord[i], ord[j]);
                    s.append(reinterpret_cast<const char*>(&m), sizeof m);
                }
            return s;
        };

        if (permutations > kCanonicalPermutationBudget) return encode(order);

        std::string best = encode(order);
        // Odometer over the permutations of every block.
        std::vector<std::size_t> current = order;
        for (auto& [lo, hi] : blocks) std::sort(current.begin() + lo, current.begin() + hi);
        for (;;) {
            std::string candidate = encode(current);
            if (candidate < best) best = std::move(candidate);
            std::size_t bi = 0;
            for (; bi < blocks.size(); ++bi) {
                auto [lo, hi] = blocks[bi];
                if (std::next_permutation(current.begin() + lo, current.begin() + hi)) break;
            }
            if (bi == blocks.size()) break;
        }
        return best;
    }

    std::unordered_map<std::string, BivariatePolynomial> memo_;
};

BivariatePolynomial x_minus_one_pow(unsigned k) {
    return (BivariatePolynomial::x() - BivariatePolynomial::constant(1)).pow(k);
}

BivariatePolynomial y_minus_one_pow(unsigned k) {
    return (BivariatePolynomial::y() - BivariatePolynomial::constant(1)).pow(k);
}

std::uint64_t to_dim(const BigInt& v) {
    if (sgn(v) < 0) throw InconsistentInput("Tutte specialization produced a negative coefficient");
    if (!v.fits_ulong_p()) throw std::overflow_error("Hilbert dimension exceeds 64 bits");
    return v.get_ui();
}

BigRational rhs_clone_identity(const Multigraph& g, const BivariatePolynomial& tutte, std::size_t t,
                               const BigRational& y) {
    if (y == 0 || y == 1 || y == -1) throw std::invalid_argument("degenerate sample point y = " + y.get_str());
    BigRational yt = 1;
    for (std::size_t i = 0; i < t; ++i) yt *= y;
    const BigRational yt1 = yt * y;
    if (yt1 == y) throw std::invalid_argument("degenerate sample point: y^(t+1) = y");
    BigRational geometric = (yt - 1) / (y - 1);
    const std::size_t rank = g.vertex_count() - component_count(g);
    BigRational prefactor = 1;
    for (std::size_t i = 0; i < rank; ++i) prefactor *= geometric;
    BigRational xarg = (yt1 - 1) / (yt1 - y);
    BigRational out = prefactor * tutte.evaluate(xarg, yt);
    out.canonicalize();
    return out;
}

}  // namespace

BivariatePolynomial tutte_deletion_contraction(const Multigraph& g) {
    Minor m{g.vertex_count(), std::vector<std::uint32_t>(g.vertex_count() * g.vertex_count())};
    for (const Edge& e : g.edges()) {
        ++m.at(e.u, e.v);
        ++m.at(e.v, e.u);
    }
    DeletionContraction dc;
    return dc.solve(m);
}

BivariatePolynomial tutte_activity(const Multigraph& g, const EdgeOrder& order, const Budget& budget) {
    const std::size_t n = g.vertex_count(), c = component_count(g);
    std::map<std::pair<std::size_t, std::size_t>, BigInt> counts;  // (e(F), act) -> count
    for (const ForestRecord& f : enumerate_forests(g, order, budget)) counts[{f.size, f.activity}] += 1;
    BivariatePolynomial out;
    for (const auto& [key, count] : counts) {
        auto [size, act] = key;
        BivariatePolynomial term = x_minus_one_pow(static_cast<unsigned>(n - size - c));
        out += term * BivariatePolynomial::monomial(0, static_cast<unsigned>(act), count);
    }
    return out;
}

BivariatePolynomial tutte_corank_nullity(const RankFunction& rank, std::size_t ground_size, const Budget& budget) {
    require_enumerable(ground_size, budget, "tutte_corank_nullity");
    if (ground_size > 63) throw BudgetExceeded("tutte_corank_nullity: ground set exceeds 63 elements");
    const std::uint64_t full = ground_size == 0 ? 0 : (~std::uint64_t{0} >> (64 - ground_size));
    const std::size_t total_rank = rank(full);
    std::map<std::pair<std::size_t, std::size_t>, BigInt> counts;  // (corank, nullity) -> count
    for (std::uint64_t s = 0;; ++s) {
        const std::size_t r = rank(s);
        const std::size_t size = static_cast<std::size_t>(std::popcount(s));
        if (r > total_rank || r > size) throw std::logic_error("rank oracle is not a matroid rank function");
        counts[{total_rank - r, size - r}] += 1;
        if (s == full) break;
    }
    BivariatePolynomial out;
    for (const auto& [key, count] : counts)
        out += x_minus_one_pow(static_cast<unsigned>(key.first)) * y_minus_one_pow(static_cast<unsigned>(key.second)) *
               BivariatePolynomial::constant(count);
    return out;
}

RankFunction graphic_rank(const Multigraph& g) {
    if (g.edge_count() > 63) throw BudgetExceeded("graphic_rank: more than 63 edges");
    return [g](std::uint64_t mask) {
        detail::DisjointSets sets(g.vertex_count());
        std::size_t r = 0;
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            if (((mask >> e) & 1U) && sets.unite(g.edge(e).u, g.edge(e).v)) ++r;
        return r;
    };
}

HilbertSeries forest_hilbert_from_nullity(const BivariatePolynomial& tutte, std::size_t nullity) {
    // sum c_ij (1+t)^i t^(nullity - j)
    UnivariatePolynomial sum;
    const UnivariatePolynomial one_plus_t(std::vector<BigInt>{1, 1});
    for (const auto& [e, c] : tutte.terms()) {
        if (e.second > nullity)
            throw InconsistentInput("T(1+t, 1/t) t^" + std::to_string(nullity) + " is not a polynomial: y-degree " +
                                    std::to_string(e.second) + " exceeds the nullity");
        sum += one_plus_t.pow(e.first) * UnivariatePolynomial::monomial(nullity - e.second, c);
    }
    std::vector<std::uint64_t> dims;
    for (const BigInt& v : sum.coeffs()) dims.push_back(to_dim(v));
    return HilbertSeries(std::move(dims));
}

HilbertSeries tree_hilbert_from_nullity(const BivariatePolynomial& tutte, std::size_t nullity) {
    UnivariatePolynomial sum;
    for (const auto& [e, c] : tutte.terms()) {
        if (e.second > nullity)
            throw InconsistentInput("T(1, 1/t) t^" + std::to_string(nullity) + " is not a polynomial: y-degree " +
                                    std::to_string(e.second) + " exceeds the nullity");
        sum += UnivariatePolynomial::monomial(nullity - e.second, c);
    }
    std::vector<std::uint64_t> dims;
    for (const BigInt& v : sum.coeffs()) dims.push_back(to_dim(v));
    return HilbertSeries(std::move(dims));
}

namespace {

std::size_t nullity_of(std::size_t edges, std::size_t vertices, std::size_t components) {
    if (components > vertices || edges + components < vertices)
        throw InconsistentInput("e - v + c is negative for e=" + std::to_string(edges) + ", v=" +
                                std::to_string(vertices) + ", c=" + std::to_string(components));
    return edges + components - vertices;
}

}  // namespace

HilbertSeries forest_hilbert_from_tutte(const BivariatePolynomial& tutte, std::size_t edges, std::size_t vertices,
                                        std::size_t components) {
    return forest_hilbert_from_nullity(tutte, nullity_of(edges, vertices, components));
}

HilbertSeries tree_hilbert_from_tutte(const BivariatePolynomial& tutte, std::size_t edges, std::size_t vertices,
                                      std::size_t components) {
    return tree_hilbert_from_nullity(tutte, nullity_of(edges, vertices, components));
}

HilbertSeries tlabel_hilbert(const Multigraph& g, std::size_t t) {
    Multigraph clone = clone_graph(g, t);
    return forest_hilbert_from_tutte(tutte_deletion_contraction(clone), clone.edge_count(), clone.vertex_count(),
                                     component_count(clone));
}

bool clone_tutte_identity_check(const Multigraph& g, std::size_t t, const std::vector<BigRational>& samples) {
    const BivariatePolynomial tutte = tutte_deletion_contraction(g);
    const BivariatePolynomial clone_tutte = tutte_deletion_contraction(clone_graph(g, t));
    for (const BigRational& y : samples) {
        BigRational rhs = rhs_clone_identity(g, tutte, t, y);
        BigRational lhs = clone_tutte.evaluate(1 + 1 / y, y);
        if (lhs != rhs) return false;
    }
    return true;
}

bool tlabel_formula_check(const HilbertSeries& hs, const Multigraph& g, std::size_t t,
                          const std::vector<BigRational>& samples) {
    const BivariatePolynomial tutte = tutte_deletion_contraction(g);
    const long top = static_cast<long>(t * g.edge_count() + component_count(g)) - static_cast<long>(g.vertex_count());
    for (const BigRational& y : samples) {
        BigRational rhs = rhs_clone_identity(g, tutte, t, y);
        BigRational lhs = 0;
        for (std::size_t k = 0; k < hs.size(); ++k) {
            long exponent = top - static_cast<long>(k);
            BigRational power = 1;
            for (long i = 0; i < std::labs(exponent); ++i) power *= y;
            if (exponent < 0) power = 1 / power;
            lhs += BigRational(BigInt(static_cast<unsigned long>(hs[k]))) * power;
        }
        lhs.canonicalize();
        if (lhs != rhs) return false;
    }
    return true;
}

UnivariatePolynomial labelled_forest_polynomial(const HilbertSeries& hs, std::size_t t) {
    if (hs.size() == 0) throw InconsistentInput("empty Hilbert series");
    const std::size_t top = hs.size() - 1;
    if (top % t != 0)
        throw InconsistentInput("top degree " + std::to_string(top) + " is not divisible by t = " + std::to_string(t));
    std::vector<BigInt> coeffs(top + 1);
    for (std::size_t k = 0; k <= top; ++k) coeffs[top - k] = BigInt(static_cast<unsigned long>(hs[k]));
    return UnivariatePolynomial(std::move(coeffs));
}

BivariatePolynomial reconstruct_tutte(const HilbertSeries& hs, std::size_t t, std::size_t n) {
    if (n == 0) throw std::invalid_argument("reconstruct_tutte: n must be >= 1");
    if (t < n) throw std::invalid_argument("reconstruct_tutte: t must be at least n (t=" + std::to_string(t) +
                                           ", n=" + std::to_string(n) + ")");
    UnivariatePolynomial remaining = labelled_forest_polynomial(hs, t);
    const std::size_t edges = (hs.size() - 1) / t;
    if (edges + 1 < n)
        throw InconsistentInput("series implies " + std::to_string(edges) + " edges, too few for a connected graph on " +
                                std::to_string(n) + " vertices");

    std::vector<UnivariatePolynomial> geometric_powers{UnivariatePolynomial::monomial(0)};
    UnivariatePolynomial geometric;
    for (std::size_t j = 0; j < t; ++j) geometric += UnivariatePolynomial::monomial(j);
    for (std::size_t k = 1; k < n; ++k) geometric_powers.push_back(geometric_powers.back() * geometric);

    // Peel the lowest term s*y^m: s forests with e(F) = m mod t and act = m div t.
    std::map<std::pair<std::size_t, std::size_t>, BigInt> counts;
    while (!remaining.is_zero()) {
        const std::size_t m = remaining.low_degree();
        const BigInt s = remaining.coefficient(m);
        if (sgn(s) < 0) throw InconsistentInput("negative coefficient at y^" + std::to_string(m) + " while peeling");
        const std::size_t forest_size = m % t, activity = m / t;
        if (forest_size >= n)
            throw InconsistentInput("peeling found forests with " + std::to_string(forest_size) +
                                    " edges on " + std::to_string(n) + " vertices");
        counts[{forest_size, activity}] += s;
        remaining -= geometric_powers[forest_size] * UnivariatePolynomial::monomial(m, s);
    }

    // Residue checks: one empty forest of activity 0, a spanning tree, and
    // sum_F 2^act(F) = T(2,2) = 2^e.
    if (counts[{0, 0}] != 1) throw InconsistentInput("residue: expected exactly one empty forest");
    BigInt trees = 0, weighted = 0;
    for (const auto& [key, count] : counts) {
        if (key.first == n - 1) trees += count;
        BigInt p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, key.second);
        weighted += count * p2;
    }
    BigInt two_e;
    mpz_ui_pow_ui(two_e.get_mpz_t(), 2, edges);
    if (sgn(trees) == 0) throw InconsistentInput("residue: no spanning trees, the graph would be disconnected");
    if (weighted != two_e) throw InconsistentInput("residue: T(2,2) = " + weighted.get_str() + " but 2^e = " +
                                                   two_e.get_str());

    BivariatePolynomial tutte;
    for (const auto& [key, count] : counts)
        tutte += x_minus_one_pow(static_cast<unsigned>(n - 1 - key.first)) *
                 BivariatePolynomial::monomial(0, static_cast<unsigned>(key.second), count);
    for (const auto& [e, c] : tutte.terms())
        if (sgn(c) < 0) throw InconsistentInput("residue: reconstructed polynomial has a negative coefficient");
    return tutte;
}

}  // namespace psalg
