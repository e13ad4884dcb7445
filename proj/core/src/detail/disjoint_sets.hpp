#ifndef PSALG_DETAIL_DISJOINT_SETS_HPP
#define PSALG_DETAIL_DISJOINT_SETS_HPP

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace psalg::detail {

/// Union by size without path compression, so unions can be rolled back.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    /// Returns false (and records nothing) when x and y are already joined.
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        history_.push_back(y);
        --components_;
        return true;
    }

    /// Undoes the most recent successful unite.
    void rollback() {
        std::size_t y = history_.back();
        history_.pop_back();
        std::size_t x = parent_[y];
        size_[x] -= size_[y];
        parent_[y] = y;
        ++components_;
    }

    std::size_t components() const noexcept { return components_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::vector<std::size_t> history_;
    std::size_t components_;
};

}  // namespace psalg::detail

#endif  // PSALG_DETAIL_DISJOINT_SETS_HPP
