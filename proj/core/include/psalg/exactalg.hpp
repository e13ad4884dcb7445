#ifndef PSALG_EXACTALG_HPP
#define PSALG_EXACTALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace psalg {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense row-major matrix. Entries are value-initialized.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Largest prime below 2^62. Residue products fit in unsigned __int128.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;  // 2^62 - 57

/// Arithmetic in Z/pZ on residues held in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint64_t modulus = kDefaultPrime);

    std::uint64_t modulus() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    std::uint64_t inv(std::uint64_t a) const;

    /// Canonical residue of an arbitrary integer.
    std::uint64_t reduce(const BigInt& v) const;
    std::uint64_t reduce(std::int64_t v) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Uniformly drawn prime in [lo, hi), reproducible from (seed, stream).
std::uint64_t random_prime(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t lo = 1ULL << 60, std::uint64_t hi = 1ULL << 62);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const Matrix<BigInt>& m);
std::size_t rank_exact(const Matrix<BigRational>& m);

/// Rank of the residue matrix over the given field.
std::size_t rank_mod(const Matrix<BigInt>& m, const PrimeField& field);

/// Max over `trials` random primes > 2^60 of the rank modulo that prime.
/// Never exceeds rank_exact(m).
std::size_t rank_modular(const Matrix<BigInt>& m, unsigned trials = 2, std::uint64_t seed = 0);

enum class RankBackend { Auto, Exact, Modular };

struct RankPolicy {
    RankBackend backend = RankBackend::Auto;
    unsigned trials = 2;
    std::uint64_t seed = 0;
    /// Auto uses exact arithmetic when rows*cols is at most this many entries.
    std::size_t exact_entry_limit = std::size_t{1} << 14;
    /// Nonzero: the scalars live in Z/pZ for this p and every rank is taken mod p.
    std::uint64_t fixed_modulus = 0;
};

/// Indices (ascending) of a maximal linearly independent set of rows; the
/// count is the rank under `policy`.
std::vector<std::size_t> independent_rows(const Matrix<BigInt>& m, const RankPolicy& policy);

}  // namespace psalg

#endif  // PSALG_EXACTALG_HPP
