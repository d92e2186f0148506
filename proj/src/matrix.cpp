#include "ugit/matrix.hpp"

#include <algorithm>

#include "ugit/error.hpp"

namespace ugit {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

bool QMatrix::is_zero() const {
    for (const Rat& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) fail("ShapeMismatch", "matrix product shape mismatch");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rat& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        fail("ShapeMismatch", "matrix sum shape mismatch");
    QMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        fail("ShapeMismatch", "matrix difference shape mismatch");
    QMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

QMatrix QMatrix::scaled(const Rat& s) const {
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) fail("ShapeMismatch", "matrix-vector shape mismatch");
    std::vector<Rat> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

RrefResult rref(QMatrix m) {
    RrefResult res;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t r = pr; r < m.rows(); ++r)
            if (!m.at(r, c).is_zero()) { sel = r; break; }
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pr, j));
        Rat inv_pivot = Rat(1) / m.at(pr, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(pr, j) *= inv_pivot;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr || m.at(r, c).is_zero()) continue;
            Rat f = m.at(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(pr, j);
        }
        res.pivot_cols.push_back(c);
        ++pr;
    }
    res.rank = res.pivot_cols.size();
    res.mat = std::move(m);
    return res;
}

std::size_t rank(const QMatrix& m) {
    return rref(m).rank;
}

std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols());
        v[f] = Rat(1);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = -r.mat.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) fail("ShapeMismatch", "inverse of non-square matrix");
    std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Rat(1);
    }
    RrefResult red = rref(std::move(aug));
    if (red.rank < n || red.pivot_cols[n - 1] != n - 1)
        fail("Singular", "matrix is not invertible");
    QMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.mat.at(r, n + c);
    return inv;
}

bool solve(const QMatrix& m, const std::vector<Rat>& rhs, std::vector<Rat>& x) {
    if (rhs.size() != m.rows()) fail("ShapeMismatch", "solve rhs shape mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    RrefResult red = rref(std::move(aug));
    for (std::size_t c : red.pivot_cols)
        if (c == m.cols()) return false;
    x.assign(m.cols(), Rat(0));
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
        x[red.pivot_cols[i]] = red.mat.at(i, m.cols());
    return true;
}

Rat determinant(QMatrix m) {
    if (m.rows() != m.cols()) fail("ShapeMismatch", "determinant of non-square matrix");
    std::size_t n = m.rows();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = n;
        for (std::size_t r = c; r < n; ++r)
            if (!m.at(r, c).is_zero()) { sel = r; break; }
        if (sel == n) return Rat(0);
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Rat inv_pivot = Rat(1) / m.at(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m.at(r, c).is_zero()) continue;
            Rat f = m.at(r, c) * inv_pivot;
            for (std::size_t j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return det;
}

void SpanTracker::reduce(std::vector<Rat>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& coef = v[lead_[i]];
        if (coef.is_zero()) continue;
        Rat f = coef; // rows are monic at their leading index
        for (std::size_t j = lead_[i]; j < dim_; ++j)
            if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
    }
}

bool SpanTracker::insert(std::vector<Rat> v) {
    if (v.size() != dim_) fail("ShapeMismatch", "span tracker dimension mismatch");
    reduce(v);
    std::size_t lead = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) { lead = j; break; }
    if (lead == dim_) return false;
    Rat inv_lead = Rat(1) / v[lead];
    for (std::size_t j = lead; j < dim_; ++j) v[j] *= inv_lead;
    // Back-substitute into existing rows to stay fully reduced.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rat f = rows_[i][lead];
        if (f.is_zero()) continue;
        for (std::size_t j = lead; j < dim_; ++j)
            if (!v[j].is_zero()) rows_[i][j] -= f * v[j];
    }
    std::size_t pos = 0;
    while (pos < lead_.size() && lead_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    lead_.insert(lead_.begin() + pos, lead);
    return true;
}

bool SpanTracker::contains(std::vector<Rat> v) const {
    if (v.size() != dim_) fail("ShapeMismatch", "span tracker dimension mismatch");
    reduce(v);
    for (const Rat& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace ugit
