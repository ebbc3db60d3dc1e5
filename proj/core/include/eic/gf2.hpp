#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eic {

/// Bit vector over GF(2), packed 64 bits per word. Bits beyond len are kept
/// zero so whole-word XOR and comparison are valid.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }

    bool any() const;
    std::size_t popcount() const;
    /// Index of lowest set bit, or size() if none.
    std::size_t first_set() const;

    std::string to_string() const;

    bool operator==(const BitVector&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words_mut() { return words_; }

    static std::size_t word_count(std::size_t len) { return (len + 63) / 64; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major bit matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(BitVector::word_count(cols)),
          words_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);
    /// Rows as strings over {'0','1'}; all rows must share one length.
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        auto& w = words_[r * wpr_ + (c >> 6)];
        if (v) w |= mask; else w &= ~mask;
    }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void xor_row(std::size_t dst, std::size_t src);  // row[dst] ^= row[src]
    void swap_rows(std::size_t a, std::size_t b);
    bool row_any(std::size_t r) const;
    std::size_t row_popcount(std::size_t r) const;

    std::vector<std::string> to_strings() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

struct RowReduction {
    BitMatrix reduced;                       // reduced row-echelon form
    std::vector<std::size_t> pivot_columns;  // one per nonzero row of `reduced`
};

/// Rank of m over GF(2). Pure; works on a copy.
std::size_t rank(const BitMatrix& m);

/// Reduced row-echelon form with the same rowspan as m.
RowReduction row_reduce(const BitMatrix& m);

/// If v lies in the rowspan of m, returns c (length m.rows()) with c*m == v.
/// Throws std::invalid_argument on dimension mismatch.
std::optional<BitVector> express_in_rowspan(const BitMatrix& m, const BitVector& v);

/// Row vector times matrix: (1 x rows) * (rows x cols) -> (1 x cols).
BitVector row_combination(const BitVector& c, const BitMatrix& m);

/// Matrix product over GF(2).
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

/// Stacks matrices vertically; all must share a column count.
BitMatrix vstack(const std::vector<BitMatrix>& parts);

/// diag(v): square matrix with v on the diagonal.
BitMatrix diagonal(const BitVector& v);

}  // namespace eic
