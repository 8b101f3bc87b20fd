#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace coordnet {

// Packed 0/1 matrix stored as row bitsets, so row pairs can be fed straight
// into the popcount kernels. Symmetric helpers assume a square matrix.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_(words_per_row(cols)),
          bits_(rows * words_per_row(cols), 0) {}
    explicit BitMatrix(std::size_t n) : BitMatrix(n, n) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return rows_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j) {
        bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }
    void set_sym(std::size_t i, std::size_t j) {
        set(i, j);
        set(j, i);
    }

    std::span<const std::uint64_t> row(std::size_t i) const {
        return {bits_.data() + i * words_, words_};
    }
    std::span<std::uint64_t> row(std::size_t i) {
        return {bits_.data() + i * words_, words_};
    }

    // Visits the column index of every set bit in row i, ascending.
    template <typename Fn>
    void for_each_set(std::size_t i, Fn&& fn) const {
        const std::uint64_t* w = bits_.data() + i * words_;
        for (std::size_t word = 0; word < words_; ++word) {
            std::uint64_t v = w[word];
            while (v) {
                const int bit = __builtin_ctzll(v);
                fn(word * 64 + static_cast<std::size_t>(bit));
                v &= v - 1;
            }
        }
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    static std::size_t words_per_row(std::size_t cols) { return (cols + 63) / 64; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace coordnet
