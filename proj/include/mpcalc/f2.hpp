#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpcalc/errors.hpp"

namespace mpcalc {

/// Vector over F2. Used both for group elements and characters of the
/// component groups mu_2^{I+}; the pairing chi(x) = (-1)^{sum chi_i x_i}
/// is the only structure needed.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : bits_(n, 0) {}

    static BitVec parse(const std::string& s) {
        BitVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') v.bits_[i] = 1;
            else if (s[i] != '0')
                fail(ErrorKind::Schema, "bit string must contain only 0/1, got \"" + s + "\"");
        }
        return v;
    }

    std::size_t size() const { return bits_.size(); }
    int at(std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, int b) { bits_[i] = static_cast<std::uint8_t>(b & 1); }
    void flip(std::size_t i) { bits_[i] ^= 1; }

    bool is_zero() const {
        for (auto b : bits_) if (b) return false;
        return true;
    }

    BitVec operator^(const BitVec& o) const {
        BitVec r = *this;
        r ^= o;
        return r;
    }

    BitVec& operator^=(const BitVec& o) {
        if (o.size() != size())
            fail(ErrorKind::Consistency, "bit vector length mismatch: " +
                 std::to_string(size()) + " vs " + std::to_string(o.size()));
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
        return *this;
    }

    bool operator==(const BitVec& o) const { return bits_ == o.bits_; }
    bool operator!=(const BitVec& o) const { return bits_ != o.bits_; }
    bool operator<(const BitVec& o) const { return bits_ < o.bits_; }

    int dot(const BitVec& o) const {
        if (o.size() != size())
            fail(ErrorKind::Consistency, "bit vector length mismatch in pairing");
        int d = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i) d ^= (bits_[i] & o.bits_[i]);
        return d;
    }

    /// (-1)^{<this, o>}
    int pair(const BitVec& o) const { return dot(o) ? -1 : 1; }

    std::string str() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) s[i] = '1';
        return s;
    }

private:
    std::vector<std::uint8_t> bits_;
};

/// Dense F2 matrix, rows-of-BitVec. Small sizes only (component groups).
class F2Matrix {
public:
    F2Matrix() : cols_(0) {}
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows, BitVec(cols)), cols_(cols) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    int at(std::size_t r, std::size_t c) const { return rows_[r].at(c); }
    void set(std::size_t r, std::size_t c, int b) { rows_[r].set(c, b); }
    const BitVec& row(std::size_t r) const { return rows_[r]; }

    /// y = A x  (x indexed by columns)
    BitVec apply(const BitVec& x) const {
        if (x.size() != cols_)
            fail(ErrorKind::Consistency, "matrix/vector size mismatch");
        BitVec y(rows());
        for (std::size_t r = 0; r < rows(); ++r) y.set(r, rows_[r].dot(x));
        return y;
    }

    /// y = A^T x  (x indexed by rows); pullback of characters.
    BitVec apply_transpose(const BitVec& x) const {
        if (x.size() != rows())
            fail(ErrorKind::Consistency, "matrix/vector size mismatch (transpose)");
        BitVec y(cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            int d = 0;
            for (std::size_t r = 0; r < rows(); ++r) d ^= (rows_[r].at(c) & x.at(r));
            y.set(c, d);
        }
        return y;
    }

    std::size_t rank() const {
        F2Matrix m = *this;
        return m.eliminate();
    }

    /// Basis of { x : A x = 0 }.
    std::vector<BitVec> kernel_basis() const {
        // Gauss over an identity-augmented transpose would also work; here we
        // reduce A and read off free columns.
        F2Matrix m = *this;
        std::vector<std::size_t> pivot_of_col(cols_, SIZE_MAX);
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < m.rows(); ++c) {
            std::size_t p = r;
            while (p < m.rows() && !m.at(p, c)) ++p;
            if (p == m.rows()) continue;
            std::swap(m.rows_[p], m.rows_[r]);
            for (std::size_t q = 0; q < m.rows(); ++q)
                if (q != r && m.at(q, c)) m.rows_[q] ^= m.rows_[r];
            pivot_of_col[c] = r;
            ++r;
        }
        std::vector<BitVec> basis;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (pivot_of_col[c] != SIZE_MAX) continue;
            BitVec v(cols_);
            v.set(c, 1);
            for (std::size_t c2 = 0; c2 < cols_; ++c2) {
                if (pivot_of_col[c2] == SIZE_MAX) continue;
                v.set(c2, m.at(pivot_of_col[c2], c));
            }
            basis.push_back(v);
        }
        return basis;
    }

    /// One solution of A x = b, if solvable.
    std::optional<BitVec> solve(const BitVec& b) const {
        if (b.size() != rows())
            fail(ErrorKind::Consistency, "solve: rhs size mismatch");
        // augmented elimination
        std::vector<BitVec> aug(rows());
        std::vector<int> rhs(rows());
        for (std::size_t r = 0; r < rows(); ++r) { aug[r] = rows_[r]; rhs[r] = b.at(r); }
        std::vector<std::size_t> pivot_col;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < aug.size(); ++c) {
            std::size_t p = r;
            while (p < aug.size() && !aug[p].at(c)) ++p;
            if (p == aug.size()) continue;
            std::swap(aug[p], aug[r]);
            std::swap(rhs[p], rhs[r]);
            for (std::size_t q = 0; q < aug.size(); ++q) {
                if (q != r && aug[q].at(c)) { aug[q] ^= aug[r]; rhs[q] ^= rhs[r]; }
            }
            pivot_col.push_back(c);
            ++r;
        }
        for (std::size_t q = r; q < aug.size(); ++q)
            if (rhs[q]) return std::nullopt;
        BitVec x(cols_);
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            x.set(pivot_col[k], rhs[k]);
        return x;
    }

private:
    std::size_t eliminate() {
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows(); ++c) {
            std::size_t p = r;
            while (p < rows() && !at(p, c)) ++p;
            if (p == rows()) continue;
            std::swap(rows_[p], rows_[r]);
            for (std::size_t q = 0; q < rows(); ++q)
                if (q != r && at(q, c)) rows_[q] ^= rows_[r];
            ++r;
        }
        return r;
    }

    std::vector<BitVec> rows_;
    std::size_t cols_;
};

/// Exact rational with small numerator/denominator; enough for the
/// coefficient identities iota(G~,G!) * |Sbar|^{-1} = |S|^{-1}.
struct Rat {
    long long num = 0;
    long long den = 1;

    static Rat of(long long n, long long d) {
        if (d == 0) fail(ErrorKind::Consistency, "rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = gcd_ll(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        return Rat{n, d};
    }

    Rat operator*(const Rat& o) const {
        return of(num * o.num, den * o.den);
    }

    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

private:
    static long long gcd_ll(long long a, long long b) {
        while (b) { long long t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
};

} // namespace mpcalc
