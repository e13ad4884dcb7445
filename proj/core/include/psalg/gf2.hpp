#ifndef PSALG_GF2_HPP
#define PSALG_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace psalg {

/// Matrix over the two-element field, rows packed into 64-bit words.
class Gf2Matrix {
public:
    using Bits = std::vector<bool>;

    explicit Gf2Matrix(std::size_t cols = 0) : cols_(cols), words_((cols + 63) / 64) {}

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    void add_row(const Bits& bits);
    bool get(std::size_t r, std::size_t c) const { return (rows_[r][c / 64] >> (c % 64)) & 1U; }
    Bits row(std::size_t r) const;

    std::size_t rank() const;

    /// Reduced row echelon form with zero rows dropped; canonical for the row space.
    Gf2Matrix rref() const;

    bool same_row_space(const Gf2Matrix& other) const;
    bool row_space_contains(const Bits& bits) const;

    /// Basis of the orthogonal complement of the row space.
    Gf2Matrix null_space() const;

    /// Column c of this matrix becomes column perm[c] of the result.
    Gf2Matrix relabel_columns(std::span<const std::size_t> perm) const;

    /// Every vector of the row space (2^rank of them), sorted.
    std::vector<Bits> row_space() const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    using Row = std::vector<std::uint64_t>;
    static void xor_into(Row& dst, const Row& src);
    Bits to_bits(const Row& row) const;

    std::size_t cols_;
    std::size_t words_;
    std::vector<Row> rows_;
};

}  // namespace psalg

#endif  // PSALG_GF2_HPP
