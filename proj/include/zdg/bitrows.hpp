#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace zdg {

/// Square symmetric boolean matrix stored as 64-bit row blocks.
/// Row intersection and equality are the hot operations for the
/// orthogonality machinery, so rows are kept word-aligned.
class BitRows {
public:
    BitRows() = default;
    explicit BitRows(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {}

    int size() const { return n_; }

    bool test(int i, int j) const {
        return (row(i)[std::size_t(j) >> 6] >> (j & 63)) & 1u;
    }
    void set(int i, int j) {
        row_mut(i)[std::size_t(j) >> 6] |= std::uint64_t(1) << (j & 63);
    }

    int row_count(int i) const {
        int c = 0;
        const std::uint64_t* r = row(i);
        for (std::size_t w = 0; w < words_; ++w) c += std::popcount(r[w]);
        return c;
    }

    bool rows_intersect(int i, int j) const {
        const std::uint64_t* a = row(i);
        const std::uint64_t* b = row(j);
        for (std::size_t w = 0; w < words_; ++w)
            if (a[w] & b[w]) return true;
        return false;
    }

    bool rows_equal(int i, int j) const {
        const std::uint64_t* a = row(i);
        const std::uint64_t* b = row(j);
        for (std::size_t w = 0; w < words_; ++w)
            if (a[w] != b[w]) return false;
        return true;
    }

    /// Row equality ignoring the columns `i` and `j` themselves
    /// (the punctured open-neighborhood comparison).
    bool rows_equal_punctured(int i, int j) const {
        const std::uint64_t* a = row(i);
        const std::uint64_t* b = row(j);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t mask = ~std::uint64_t(0);
            if ((std::size_t(i) >> 6) == w) mask &= ~(std::uint64_t(1) << (i & 63));
            if ((std::size_t(j) >> 6) == w) mask &= ~(std::uint64_t(1) << (j & 63));
            if ((a[w] & mask) != (b[w] & mask)) return false;
        }
        return true;
    }

    std::size_t words() const { return words_; }
    const std::uint64_t* row(int i) const { return bits_.data() + std::size_t(i) * words_; }

private:
    std::uint64_t* row_mut(int i) { return bits_.data() + std::size_t(i) * words_; }

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace zdg
