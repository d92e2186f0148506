#pragma once

#include <cstddef>
#include <vector>

#include "ugit/rational.hpp"

namespace ugit {

// Dense matrix over exact rationals. Row-major storage.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    QMatrix transpose() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    QMatrix scaled(const Rat& s) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

struct RrefResult {
    QMatrix mat;
    std::vector<std::size_t> pivot_cols; // increasing
    std::size_t rank = 0;
};

// Gauss-Jordan with deterministic pivoting: scan columns left to right, pivot
// on the smallest-index remaining row with a nonzero entry.
RrefResult rref(QMatrix m);

std::size_t rank(const QMatrix& m);

// Kernel vectors built from the free columns of the RREF, one per free column
// in increasing column order; each has a 1 in its free coordinate. The result
// is a reduced-echelon basis of ker(m).
std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m);

// Throws Error("Singular") when not invertible.
QMatrix inverse(const QMatrix& m);

// Solves m*x = rhs; returns false when inconsistent. Underdetermined systems
// get the solution with all free coordinates zero.
bool solve(const QMatrix& m, const std::vector<Rat>& rhs, std::vector<Rat>& x);

// Exact determinant by fraction-free forward elimination.
Rat determinant(QMatrix m);

// Incremental row space in reduced echelon form; used for exact span
// membership tests. Insert returns true when the vector enlarged the span.
class SpanTracker {
public:
    explicit SpanTracker(std::size_t dim) : dim_(dim) {}

    bool insert(std::vector<Rat> v);
    bool contains(std::vector<Rat> v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }

private:
    void reduce(std::vector<Rat>& v) const;

    std::size_t dim_;
    std::vector<std::vector<Rat>> rows_;    // reduced, sorted by leading index
    std::vector<std::size_t> lead_;         // leading index of each row
};

} // namespace ugit
