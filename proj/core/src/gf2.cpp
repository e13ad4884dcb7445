#include "psalg/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace psalg {

void Gf2Matrix::xor_into(Row& dst, const Row& src) {
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

Gf2Matrix::Bits Gf2Matrix::to_bits(const Row& row) const {
    Bits bits(cols_);
    for (std::size_t c = 0; c < cols_; ++c) bits[c] = (row[c / 64] >> (c % 64)) & 1U;
    return bits;
}

void Gf2Matrix::add_row(const Bits& bits) {
    if (bits.size() != cols_) throw std::invalid_argument("Gf2Matrix::add_row: width mismatch");
    Row row(words_, 0);
    for (std::size_t c = 0; c < cols_; ++c)
        if (bits[c]) row[c / 64] |= std::uint64_t{1} << (c % 64);
    rows_.push_back(std::move(row));
}

Gf2Matrix::Bits Gf2Matrix::row(std::size_t r) const { return to_bits(rows_.at(r)); }

Gf2Matrix Gf2Matrix::rref() const {
    Gf2Matrix out(cols_);
    std::vector<Row> rows = rows_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows.size(); ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r][w] & bit)) xor_into(rows[r], rows[rank]);
        ++rank;
    }
    rows.resize(rank);
    out.rows_ = std::move(rows);
    return out;
}

std::size_t Gf2Matrix::rank() const { return rref().rows(); }

bool Gf2Matrix::same_row_space(const Gf2Matrix& other) const {
    return cols_ == other.cols_ && rref().rows_ == other.rref().rows_;
}

bool Gf2Matrix::row_space_contains(const Bits& bits) const {
    Gf2Matrix extended = *this;
    extended.add_row(bits);
    return extended.rank() == rank();
}

Gf2Matrix Gf2Matrix::null_space() const {
    Gf2Matrix reduced = rref();
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        std::size_t c = 0;
        while (!reduced.get(r, c)) ++c;
        pivot_cols.push_back(c);
        is_pivot[c] = true;
    }
    Gf2Matrix out(cols_);
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Bits v(cols_, false);
        v[free] = true;
        for (std::size_t r = 0; r < reduced.rows(); ++r)
            if (reduced.get(r, free)) v[pivot_cols[r]] = true;
        out.add_row(v);
    }
    return out;
}

Gf2Matrix Gf2Matrix::relabel_columns(std::span<const std::size_t> perm) const {
    if (perm.size() != cols_) throw std::invalid_argument("Gf2Matrix::relabel_columns: size mismatch");
    Gf2Matrix out(cols_);
    for (const Row& row : rows_) {
        Bits src = to_bits(row);
        Bits dst(cols_, false);
        for (std::size_t c = 0; c < cols_; ++c) dst.at(perm[c]) = src[c];
        out.add_row(dst);
    }
    return out;
}

std::vector<Gf2Matrix::Bits> Gf2Matrix::row_space() const {
    Gf2Matrix basis = rref();
    if (basis.rows() > 24) throw std::length_error("Gf2Matrix::row_space: too many vectors to list");
    std::vector<Bits> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.rows()); ++mask) {
        Row acc(words_, 0);
        for (std::size_t r = 0; r < basis.rows(); ++r)
            if ((mask >> r) & 1U) xor_into(acc, basis.rows_[r]);
        out.push_back(to_bits(acc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace psalg
