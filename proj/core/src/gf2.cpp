#include "eic/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace eic {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i, true);
        else if (bits[i] != '0') throw std::invalid_argument("bit string must be over {0,1}");
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVector length mismatch in xor");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool BitVector::any() const {
    for (auto w : words_) if (w) return true;
    return false;
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVector::first_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return len_;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows in BitMatrix::from_strings");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j] == '1') m.set(i, j, true);
            else if (rows[i][j] != '0') throw std::invalid_argument("bit string must be over {0,1}");
        }
    }
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    auto& w = v.words_mut();
    for (std::size_t i = 0; i < wpr_; ++i) w[i] = words_[r * wpr_ + i];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch in set_row");
    for (std::size_t i = 0; i < wpr_; ++i) words_[r * wpr_ + i] = v.words()[i];
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t i = 0; i < wpr_; ++i) words_[dst * wpr_ + i] ^= words_[src * wpr_ + i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < wpr_; ++i)
        std::swap(words_[a * wpr_ + i], words_[b * wpr_ + i]);
}

bool BitMatrix::row_any(std::size_t r) const {
    for (std::size_t i = 0; i < wpr_; ++i)
        if (words_[r * wpr_ + i]) return true;
    return false;
}

std::size_t BitMatrix::row_popcount(std::size_t r) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < wpr_; ++i)
        c += static_cast<std::size_t>(std::popcount(words_[r * wpr_ + i]));
    return c;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r).to_string());
    return out;
}

namespace {

// In-place reduction to RREF. Returns pivot columns.
std::vector<std::size_t> rref_in_place(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t p = next_row;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(next_row, p);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != next_row && m.get(r, c)) m.xor_row(r, next_row);
        pivots.push_back(c);
        ++next_row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
    BitMatrix copy = m;
    return rref_in_place(copy).size();
}

RowReduction row_reduce(const BitMatrix& m) {
    RowReduction out;
    out.reduced = m;
    out.pivot_columns = rref_in_place(out.reduced);
    return out;
}

std::optional<BitVector> express_in_rowspan(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("express_in_rowspan: vector length must equal matrix columns");
    // Eliminate while tracking row combinations in a companion identity.
    BitMatrix work = m;
    BitMatrix combo = BitMatrix::identity(m.rows());
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < work.cols() && next_row < work.rows(); ++c) {
        std::size_t p = next_row;
        while (p < work.rows() && !work.get(p, c)) ++p;
        if (p == work.rows()) continue;
        work.swap_rows(next_row, p);
        combo.swap_rows(next_row, p);
        for (std::size_t r = 0; r < work.rows(); ++r) {
            if (r != next_row && work.get(r, c)) {
                work.xor_row(r, next_row);
                combo.xor_row(r, next_row);
            }
        }
        pivots.emplace_back(next_row, c);
        ++next_row;
    }
    BitVector residue = v;
    BitVector coeff(m.rows());
    for (auto [r, c] : pivots) {
        if (residue.get(c)) {
            residue ^= work.row(r);
            coeff ^= combo.row(r);
        }
    }
    if (residue.any()) return std::nullopt;
    return coeff;
}

BitVector row_combination(const BitVector& c, const BitMatrix& m) {
    if (c.size() != m.rows())
        throw std::invalid_argument("row_combination: coefficient length must equal matrix rows");
    BitVector out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (c.get(r)) out ^= m.row(r);
    return out;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVector acc(b.cols());
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(r, k)) acc ^= b.row(k);
        out.set_row(r, acc);
    }
    return out;
}

BitMatrix vstack(const std::vector<BitMatrix>& parts) {
    std::size_t cols = 0, rows = 0;
    bool first = true;
    for (const auto& p : parts) {
        if (first && p.rows() > 0) { cols = p.cols(); first = false; }
        if (p.rows() > 0 && p.cols() != cols)
            throw std::invalid_argument("vstack: column counts differ");
        rows += p.rows();
    }
    // Column count of an all-empty stack falls back to the first part's cols.
    if (first && !parts.empty()) cols = parts.front().cols();
    BitMatrix out(rows, cols);
    std::size_t r = 0;
    for (const auto& p : parts)
        for (std::size_t i = 0; i < p.rows(); ++i) out.set_row(r++, p.row(i));
    return out;
}

BitMatrix diagonal(const BitVector& v) {
    BitMatrix out(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) out.set(i, i, true);
    return out;
}

}  // namespace eic
