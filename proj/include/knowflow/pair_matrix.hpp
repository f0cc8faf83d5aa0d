#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace knowflow {

// Symmetric matrix over unordered node pairs with no diagonal.
// One value is stored per pair (i, j), i < j; at(i, j) and at(j, i)
// address the same slot. Every matrix in the pipeline (citation counts,
// CS weights, similarity scores, predicted weights) uses this layout, so
// node ordering is shared by construction.
template <class T>
class PairMatrix {
public:
    PairMatrix() : n_(0) {}
    explicit PairMatrix(std::size_t n, T init = T())
        : n_(n), values_(pair_count(n), init) {}

    static std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

    std::size_t nodes() const { return n_; }
    std::size_t pairs() const { return values_.size(); }

    T& at(std::size_t i, std::size_t j) { return values_[index(i, j)]; }
    const T& at(std::size_t i, std::size_t j) const { return values_[index(i, j)]; }

    // Pairs enumerate in lexicographic (i, j) order, i < j; this is the
    // canonical order for exports and deterministic reductions.
    template <class F>
    void for_each(F&& f) const {
        std::size_t k = 0;
        for (std::size_t i = 0; i + 1 < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) f(i, j, values_[k++]);
    }

    template <class F>
    void for_each(F&& f) {
        std::size_t k = 0;
        for (std::size_t i = 0; i + 1 < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) f(i, j, values_[k++]);
    }

    const std::vector<T>& values() const { return values_; }

    bool operator==(const PairMatrix& other) const {
        return n_ == other.n_ && values_ == other.values_;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i == j || i >= n_ || j >= n_)
            throw std::invalid_argument("PairMatrix: invalid pair index");
        if (i > j) std::swap(i, j);
        return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
    }

    std::size_t n_;
    std::vector<T> values_;
};

}  // namespace knowflow
