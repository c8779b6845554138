#include "addact/matrix.hpp"

#include <algorithm>

#include "addact/error.hpp"

namespace addact {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(std::vector<std::vector<Q>> rows) {
    QMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != m.cols_) fail(ErrorCode::Internal, "ragged matrix rows");
    m.data_ = std::move(rows);
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = data_[i][j];
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_) fail(ErrorCode::Internal, "matrix product shape mismatch");
    QMatrix out(rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (data_[i][k] == 0) continue;
            for (size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += data_[i][k] * other.at(k, j);
        }
    return out;
}

std::vector<Q> QMatrix::apply(const std::vector<Q>& v) const {
    if (v.size() != cols_) fail(ErrorCode::Internal, "matrix-vector shape mismatch");
    std::vector<Q> out(rows_, Q(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (data_[i][j] != 0) out[i] += data_[i][j] * v[j];
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) fail(ErrorCode::Internal, "matrix sum shape mismatch");
    QMatrix out = *this;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) += other.at(i, j);
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
    return *this + other.scaled(Q(-1));
}

QMatrix QMatrix::scaled(const Q& c) const {
    QMatrix out = *this;
    for (auto& row : out.data_)
        for (auto& x : row) x *= c;
    return out;
}

bool QMatrix::is_zero() const {
    for (const auto& row : data_)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

void QMatrix::append_row(std::vector<Q> row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) fail(ErrorCode::Internal, "appended row has wrong length");
    data_.push_back(std::move(row));
    ++rows_;
}

std::vector<size_t> QMatrix::rref_in_place() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t p = r;
        while (p < rows_ && data_[p][c] == 0) ++p;
        if (p == rows_) continue;
        std::swap(data_[p], data_[r]);
        Q inv = 1 / data_[r][c];
        for (size_t j = c; j < cols_; ++j) data_[r][j] *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || data_[i][c] == 0) continue;
            Q f = data_[i][c];
            for (size_t j = c; j < cols_; ++j) data_[i][j] -= f * data_[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

QMatrix QMatrix::rref() const {
    QMatrix m = *this;
    m.rref_in_place();
    return m;
}

size_t QMatrix::rank() const {
    QMatrix m = *this;
    return m.rref_in_place().size();
}

Q QMatrix::det() const {
    if (rows_ != cols_) fail(ErrorCode::Internal, "determinant of non-square matrix");
    QMatrix m = *this;
    Q det = 1;
    for (size_t c = 0; c < cols_; ++c) {
        size_t p = c;
        while (p < rows_ && m.data_[p][c] == 0) ++p;
        if (p == rows_) return Q(0);
        if (p != c) {
            std::swap(m.data_[p], m.data_[c]);
            det = -det;
        }
        det *= m.data_[c][c];
        Q inv = 1 / m.data_[c][c];
        for (size_t i = c + 1; i < rows_; ++i) {
            if (m.data_[i][c] == 0) continue;
            Q f = m.data_[i][c] * inv;
            for (size_t j = c; j < cols_; ++j) m.data_[i][j] -= f * m.data_[c][j];
        }
    }
    return det;
}

QMatrix QMatrix::power(unsigned k) const {
    if (rows_ != cols_) fail(ErrorCode::Internal, "power of non-square matrix");
    QMatrix acc = identity(rows_);
    QMatrix base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

QMatrix QMatrix::kernel_basis() const {
    QMatrix m = *this;
    std::vector<size_t> pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;

    QMatrix ker(0, cols_);
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Q> v(cols_, Q(0));
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, c);
        ker.append_row(std::move(v));
    }
    ker.rref_in_place();
    return ker;
}

std::optional<std::vector<Q>> QMatrix::solve(const std::vector<Q>& b) const {
    if (b.size() != rows_) fail(ErrorCode::Internal, "solve rhs length mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = data_[i][j];
        aug.at(i, cols_) = b[i];
    }
    std::vector<size_t> pivots = aug.rref_in_place();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Q> x(cols_, Q(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) fail(ErrorCode::Internal, "inverting a non-square matrix");
    QMatrix aug(rows_, 2 * rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < rows_; ++j) aug.at(i, j) = data_[i][j];
        aug.at(i, rows_ + i) = 1;
    }
    auto pivots = aug.rref_in_place();
    if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() != rows_ - 1))
        fail(ErrorCode::Internal, "inverting a singular matrix");
    QMatrix out(rows_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < rows_; ++j) out.at(i, j) = aug.at(i, rows_ + j);
    return out;
}

Subspace Subspace::span(size_t ambient, const std::vector<std::vector<Q>>& vectors) {
    Subspace s(ambient);
    QMatrix m(0, ambient);
    for (const auto& v : vectors) {
        if (v.size() != ambient) fail(ErrorCode::Internal, "span vector has wrong length");
        m.append_row(v);
    }
    m.rref_in_place();
    QMatrix basis(0, ambient);
    for (size_t i = 0; i < m.rows(); ++i) {
        bool zero = true;
        for (size_t j = 0; j < ambient; ++j)
            if (m.at(i, j) != 0) { zero = false; break; }
        if (!zero) basis.append_row(m.row(i));
    }
    s.basis_ = basis;
    return s;
}

Subspace Subspace::full(size_t ambient) {
    Subspace s(ambient);
    s.basis_ = QMatrix::identity(ambient);
    return s;
}

bool Subspace::contains(const std::vector<Q>& v) const {
    return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    for (size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<std::vector<Q>> Subspace::coordinates(const std::vector<Q>& v) const {
    if (v.size() != ambient_) fail(ErrorCode::Internal, "coordinates: wrong ambient dimension");
    return basis_.transpose().solve(v);
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) fail(ErrorCode::Internal, "subspace sum ambient mismatch");
    std::vector<std::vector<Q>> vecs;
    for (size_t i = 0; i < dim(); ++i) vecs.push_back(basis_.row(i));
    for (size_t i = 0; i < other.dim(); ++i) vecs.push_back(other.basis_.row(i));
    return span(ambient_, vecs);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) fail(ErrorCode::Internal, "subspace intersect ambient mismatch");
    // v in both iff v = x B1 = y B2; solve [B1^T | -B2^T] (x,y)^T = 0.
    size_t d1 = dim(), d2 = other.dim();
    QMatrix stacked(ambient_, d1 + d2);
    for (size_t i = 0; i < ambient_; ++i) {
        for (size_t j = 0; j < d1; ++j) stacked.at(i, j) = basis_.at(j, i);
        for (size_t j = 0; j < d2; ++j) stacked.at(i, d1 + j) = -other.basis_.at(j, i);
    }
    QMatrix ker = stacked.kernel_basis();
    std::vector<std::vector<Q>> vecs;
    for (size_t k = 0; k < ker.rows(); ++k) {
        std::vector<Q> v(ambient_, Q(0));
        for (size_t j = 0; j < d1; ++j)
            for (size_t i = 0; i < ambient_; ++i) v[i] += ker.at(k, j) * basis_.at(j, i);
        vecs.push_back(std::move(v));
    }
    return span(ambient_, vecs);
}

ZMatrix ZMatrix::identity(size_t n) {
    ZMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMatrix ZMatrix::from_rows(std::vector<std::vector<Z>> rows) {
    ZMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != m.cols_) fail(ErrorCode::Internal, "ragged matrix rows");
    m.data_ = std::move(rows);
    return m;
}

ZMatrix ZMatrix::transpose() const {
    ZMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = data_[i][j];
    return t;
}

ZMatrix ZMatrix::operator*(const ZMatrix& other) const {
    if (cols_ != other.rows_) fail(ErrorCode::Internal, "matrix product shape mismatch");
    ZMatrix out(rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (data_[i][k] == 0) continue;
            for (size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += data_[i][k] * other.at(k, j);
        }
    return out;
}

QMatrix ZMatrix::to_q() const {
    QMatrix out(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = Q(data_[i][j]);
    return out;
}

Z ZMatrix::det() const {
    Q d = to_q().det();
    if (d.get_den() != 1) fail(ErrorCode::Internal, "integer determinant came out fractional");
    return d.get_num();
}

size_t ZMatrix::rank() const { return to_q().rank(); }

SmithForm ZMatrix::smith_normal_form() const {
    ZMatrix d = *this;
    ZMatrix u = identity(rows_);
    ZMatrix v = identity(cols_);

    auto row_op = [&](size_t i, size_t k, const Z& f) {
        // row i -= f * row k, in both d and u
        for (size_t j = 0; j < d.cols_; ++j) d.at(i, j) -= f * d.at(k, j);
        for (size_t j = 0; j < u.cols_; ++j) u.at(i, j) -= f * u.at(k, j);
    };
    auto col_op = [&](size_t j, size_t k, const Z& f) {
        for (size_t i = 0; i < d.rows_; ++i) d.at(i, j) -= f * d.at(i, k);
        for (size_t i = 0; i < v.rows_; ++i) v.at(i, j) -= f * v.at(i, k);
    };
    auto row_swap = [&](size_t i, size_t k) {
        std::swap(d.data_[i], d.data_[k]);
        std::swap(u.data_[i], u.data_[k]);
    };
    auto col_swap = [&](size_t j, size_t k) {
        for (size_t i = 0; i < d.rows_; ++i) std::swap(d.at(i, j), d.at(i, k));
        for (size_t i = 0; i < v.rows_; ++i) std::swap(v.at(i, j), v.at(i, k));
    };
    auto row_negate = [&](size_t i) {
        for (size_t j = 0; j < d.cols_; ++j) d.at(i, j) = -d.at(i, j);
        for (size_t j = 0; j < u.cols_; ++j) u.at(i, j) = -u.at(i, j);
    };

    size_t t = 0;
    size_t bound = std::min(rows_, cols_);
    while (t < bound) {
        // Find a nonzero entry in the remaining block, smallest absolute value.
        size_t pi = t, pj = t;
        bool found = false;
        Z best = 0;
        for (size_t i = t; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                if (j < t) continue;
                if (d.at(i, j) == 0) continue;
                Z a = abs(d.at(i, j));
                if (!found || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows_; ++i) {
                if (d.at(i, t) == 0) continue;
                Z f = d.at(i, t) / d.at(t, t);  // C++ truncates toward zero; remainder stays small
                row_op(i, t, f);
                if (d.at(i, t) != 0) {
                    row_swap(t, i);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols_; ++j) {
                if (d.at(t, j) == 0) continue;
                Z f = d.at(t, j) / d.at(t, t);
                col_op(j, t, f);
                if (d.at(t, j) != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
        }
        if (d.at(t, t) < 0) row_negate(t);
        ++t;
    }

    // Enforce the divisibility chain d[i] | d[i+1] with the explicit unimodular
    // pair sending diag(a, b) to diag(g, ab/g), where g = xa + yb.
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i + 1 < t; ++i) {
            Z a = d.at(i, i), b = d.at(i + 1, i + 1);
            if (b % a == 0) continue;
            changed = true;
            Z g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            // Left factor [[x, y], [-b/g, a/g]] acting on rows i, i+1.
            auto left2 = [&](ZMatrix& m) {
                for (size_t j = 0; j < m.cols(); ++j) {
                    Z r0 = x * m.at(i, j) + y * m.at(i + 1, j);
                    Z r1 = (-b / g) * m.at(i, j) + (a / g) * m.at(i + 1, j);
                    m.at(i, j) = r0;
                    m.at(i + 1, j) = r1;
                }
            };
            // Right factor [[1, -yb/g], [1, xa/g]] acting on columns i, i+1.
            auto right2 = [&](ZMatrix& m) {
                for (size_t r = 0; r < m.rows(); ++r) {
                    Z c0 = m.at(r, i) + m.at(r, i + 1);
                    Z c1 = (-y * b / g) * m.at(r, i) + (x * a / g) * m.at(r, i + 1);
                    m.at(r, i) = c0;
                    m.at(r, i + 1) = c1;
                }
            };
            left2(d);
            left2(u);
            right2(d);
            right2(v);
        }
    }
    return {u, d, v};
}

ZMatrix ZMatrix::hermite_rows() const {
    ZMatrix h = *this;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < h.rows_; ++c) {
        // gcd the column below r into row r
        while (true) {
            size_t p = h.rows_;
            Z best = 0;
            for (size_t i = r; i < h.rows_; ++i) {
                if (h.at(i, c) == 0) continue;
                Z a = abs(h.at(i, c));
                if (p == h.rows_ || a < best) {
                    p = i;
                    best = a;
                }
            }
            if (p == h.rows_) break;
            std::swap(h.data_[p], h.data_[r]);
            bool done = true;
            for (size_t i = r + 1; i < h.rows_; ++i) {
                if (h.at(i, c) == 0) continue;
                Z f = h.at(i, c) / h.at(r, c);
                for (size_t j = 0; j < cols_; ++j) h.at(i, j) -= f * h.at(r, j);
                if (h.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0)
            for (size_t j = 0; j < cols_; ++j) h.at(r, j) = -h.at(r, j);
        for (size_t i = 0; i < r; ++i) {
            Z f;
            mpz_fdiv_q(f.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
            if (f == 0) continue;
            for (size_t j = 0; j < cols_; ++j) h.at(i, j) -= f * h.at(r, j);
        }
        ++r;
    }
    ZMatrix out(0, cols_);
    std::vector<std::vector<Z>> rows;
    for (size_t i = 0; i < r; ++i) rows.push_back(h.data_[i]);
    return from_rows(std::move(rows));
}

bool ZMatrix::is_lattice_basis() const {
    if (rows_ != cols_) return false;
    Z d = det();
    return d == 1 || d == -1;
}

std::vector<Z> primitive_vector(const std::vector<Z>& v) {
    Z g = 0;
    for (const Z& x : v) g = gcd(g, x);
    if (g == 0) return v;
    std::vector<Z> out;
    out.reserve(v.size());
    for (const Z& x : v) out.push_back(x / g);
    return out;
}

std::vector<Q> q_vector(const std::vector<Z>& v) {
    std::vector<Q> out;
    out.reserve(v.size());
    for (const Z& x : v) out.emplace_back(x);
    return out;
}

Z dot(const std::vector<Z>& a, const std::vector<Z>& b) {
    if (a.size() != b.size()) fail(ErrorCode::Internal, "dot product length mismatch");
    Z s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Q dot(const std::vector<Q>& a, const std::vector<Q>& b) {
    if (a.size() != b.size()) fail(ErrorCode::Internal, "dot product length mismatch");
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace addact
