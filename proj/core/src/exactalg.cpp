#include "psalg/exactalg.hpp"

#include <algorithm>
#include <random>

namespace psalg {

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
    if (modulus < 2 || modulus >= (1ULL << 63)) throw std::invalid_argument("PrimeField: modulus out of range");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t result = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
    return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const BigInt& v) const {
    static_assert(sizeof(unsigned long) == 8, "mpz_fdiv_ui needs a 64-bit unsigned long");
    return mpz_fdiv_ui(v.get_mpz_t(), p_);
}

std::uint64_t PrimeField::reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a deterministic witness set below 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime(std::uint64_t seed, std::uint64_t stream, std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) throw std::invalid_argument("random_prime: empty range");
    std::mt19937_64 rng(splitmix64(seed) ^ splitmix64(stream + 0x51ed270b27a3f1c5ULL));
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi - 1);
    for (;;) {
        std::uint64_t candidate = dist(rng) | 1ULL;
        if (candidate < hi && is_prime(candidate)) return candidate;
    }
}

std::size_t rank_exact(const Matrix<BigInt>& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    Matrix<BigInt> a = m;
    BigInt prev = 1;
    BigInt tmp;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && sgn(a(pivot, c)) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
        const BigInt& p = a(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const BigInt factor = a(r, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                // a[r][j] = (p * a[r][j] - factor * a[rank][j]) / prev, exact by Sylvester's identity.
                mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), a(r, j).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), a(rank, j).get_mpz_t());
                mpz_divexact(a(r, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            a(r, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::size_t rank_exact(const Matrix<BigRational>& m) {
    Matrix<BigInt> scaled(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BigInt denom_lcm = 1;
        for (const auto& v : m.row(r)) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), v.get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const BigRational& v = m(r, c);
            scaled(r, c) = v.get_num() * (denom_lcm / v.get_den());
        }
    }
    return rank_exact(scaled);
}

namespace {

// Incremental elimination mod p; returns the indices of rows that raised the rank.
std::vector<std::size_t> independent_rows_mod(const Matrix<BigInt>& m, const PrimeField& field) {
    const std::size_t cols = m.cols();
    std::vector<std::size_t> picked;
    if (cols == 0) return picked;
    // Echelon rows, each normalized to a leading 1, kept sorted by pivot column.
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::uint64_t> work(cols);
    for (std::size_t r = 0; r < m.rows() && basis.size() < cols; ++r) {
        bool nonzero = false;
        for (std::size_t c = 0; c < cols; ++c) {
            work[c] = sgn(m(r, c)) == 0 ? 0 : field.reduce(m(r, c));
            nonzero |= work[c] != 0;
        }
        if (!nonzero) continue;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::uint64_t f = work[pivots[b]];
            if (f == 0) continue;
            const auto& brow = basis[b];
            for (std::size_t c = pivots[b]; c < cols; ++c)
                if (brow[c]) work[c] = field.sub(work[c], field.mul(f, brow[c]));
        }
        std::size_t lead = 0;
        while (lead < cols && work[lead] == 0) ++lead;
        if (lead == cols) continue;
        const std::uint64_t s = field.inv(work[lead]);
        for (std::size_t c = lead; c < cols; ++c) work[c] = field.mul(work[c], s);
        auto pos = std::lower_bound(pivots.begin(), pivots.end(), lead) - pivots.begin();
        pivots.insert(pivots.begin() + pos, lead);
        basis.insert(basis.begin() + pos, work);
        picked.push_back(r);
    }
    return picked;
}

void make_primitive(std::vector<BigInt>& v, std::size_t from) {
    BigInt g = 0;
    for (std::size_t c = from; c < v.size(); ++c) {
        if (sgn(v[c]) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[c].get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (std::size_t c = from; c < v.size(); ++c)
            if (sgn(v[c]) != 0) mpz_divexact(v[c].get_mpz_t(), v[c].get_mpz_t(), g.get_mpz_t());
}

// Incremental fraction-free elimination over Z with content removal.
std::vector<std::size_t> independent_rows_exact(const Matrix<BigInt>& m) {
    const std::size_t cols = m.cols();
    std::vector<std::size_t> picked;
    if (cols == 0) return picked;
    std::vector<std::vector<BigInt>> basis;
    std::vector<std::size_t> pivots;
    std::vector<BigInt> work(cols);
    BigInt f;
    for (std::size_t r = 0; r < m.rows() && basis.size() < cols; ++r) {
        bool nonzero = false;
        for (std::size_t c = 0; c < cols; ++c) {
            work[c] = m(r, c);
            nonzero |= sgn(work[c]) != 0;
        }
        if (!nonzero) continue;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::size_t pc = pivots[b];
            if (sgn(work[pc]) == 0) continue;
            const auto& brow = basis[b];
            f = work[pc];
            // work = brow[pc] * work - f * brow; brow vanishes left of pc but work need not.
            for (std::size_t c = 0; c < cols; ++c) {
                if (sgn(work[c]) != 0) mpz_mul(work[c].get_mpz_t(), work[c].get_mpz_t(), brow[pc].get_mpz_t());
                if (c >= pc && sgn(brow[c]) != 0) mpz_submul(work[c].get_mpz_t(), f.get_mpz_t(), brow[c].get_mpz_t());
            }
            make_primitive(work, 0);
        }
        std::size_t lead = 0;
        while (lead < cols && sgn(work[lead]) == 0) ++lead;
        if (lead == cols) continue;
        auto pos = std::lower_bound(pivots.begin(), pivots.end(), lead) - pivots.begin();
        pivots.insert(pivots.begin() + pos, lead);
        basis.insert(basis.begin() + pos, work);
        picked.push_back(r);
    }
    return picked;
}

}  // namespace

std::size_t rank_mod(const Matrix<BigInt>& m, const PrimeField& field) {
    return independent_rows_mod(m, field).size();
}

std::size_t rank_modular(const Matrix<BigInt>& m, unsigned trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("rank_modular: trials must be >= 1");
    std::size_t best = 0;
    for (unsigned t = 0; t < trials; ++t) best = std::max(best, rank_mod(m, PrimeField(random_prime(seed, t))));
    return best;
}

std::vector<std::size_t> independent_rows(const Matrix<BigInt>& m, const RankPolicy& policy) {
    if (policy.fixed_modulus != 0) return independent_rows_mod(m, PrimeField(policy.fixed_modulus));

    bool exact = policy.backend == RankBackend::Exact;
    if (policy.backend == RankBackend::Auto) exact = m.rows() * m.cols() <= policy.exact_entry_limit;
    if (exact) return independent_rows_exact(m);

    if (policy.trials == 0) throw std::invalid_argument("independent_rows: trials must be >= 1");
    std::vector<std::size_t> best;
    for (unsigned t = 0; t < policy.trials; ++t) {
        auto picked = independent_rows_mod(m, PrimeField(random_prime(policy.seed, t)));
        if (picked.size() > best.size()) best = std::move(picked);
        if (best.size() == std::min(m.rows(), m.cols())) break;
    }
    return best;
}

}  // namespace psalg
