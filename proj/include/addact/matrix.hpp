#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "addact/rational.hpp"

namespace addact {

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows, std::vector<Q>(cols, Q(0))) {}

    static QMatrix identity(size_t n);
    static QMatrix from_rows(std::vector<std::vector<Q>> rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Q& at(size_t i, size_t j) { return data_[i][j]; }
    const Q& at(size_t i, size_t j) const { return data_[i][j]; }
    const std::vector<Q>& row(size_t i) const { return data_[i]; }

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& other) const;
    std::vector<Q> apply(const std::vector<Q>& v) const;  // matrix * column vector
    QMatrix operator+(const QMatrix& other) const;
    QMatrix operator-(const QMatrix& other) const;
    QMatrix scaled(const Q& c) const;
    bool operator==(const QMatrix& other) const = default;
    bool is_zero() const;

    void append_row(std::vector<Q> row);

    // Gauss-Jordan elimination in place; returns pivot column indices.
    std::vector<size_t> rref_in_place();
    QMatrix rref() const;
    size_t rank() const;
    Q det() const;
    QMatrix power(unsigned k) const;

    // Rows of the result form the canonical (rref) basis of {v : A v = 0}.
    QMatrix kernel_basis() const;

    // One solution of A x = b, or nullopt when inconsistent.
    std::optional<std::vector<Q>> solve(const std::vector<Q>& b) const;

    // Inverse of a square invertible matrix; Internal error otherwise.
    QMatrix inverse() const;

    const std::vector<std::vector<Q>>& data() const { return data_; }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Q>> data_;
};

// Subspace of Q^n stored as canonical rref row basis, so equal subspaces
// compare equal componentwise.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
    static Subspace span(size_t ambient, const std::vector<std::vector<Q>>& vectors);
    static Subspace full(size_t ambient);

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const QMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Q>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const = default;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    // Coordinates of v in the stored basis; nullopt if v is outside.
    std::optional<std::vector<Q>> coordinates(const std::vector<Q>& v) const;

private:
    size_t ambient_ = 0;
    QMatrix basis_;
};

struct SmithForm;

class ZMatrix {
public:
    ZMatrix() = default;
    ZMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows, std::vector<Z>(cols, Z(0))) {}
    static ZMatrix identity(size_t n);
    static ZMatrix from_rows(std::vector<std::vector<Z>> rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Z& at(size_t i, size_t j) { return data_[i][j]; }
    const Z& at(size_t i, size_t j) const { return data_[i][j]; }
    const std::vector<Z>& row(size_t i) const { return data_[i]; }

    ZMatrix transpose() const;
    ZMatrix operator*(const ZMatrix& other) const;
    bool operator==(const ZMatrix& other) const = default;

    Z det() const;
    size_t rank() const;
    QMatrix to_q() const;

    // u * (*this) * v = d, with u and v unimodular and d diagonal with
    // nonnegative entries satisfying d[i] | d[i+1].
    SmithForm smith_normal_form() const;

    // Row-style Hermite form: row echelon, positive pivots, entries above each
    // pivot reduced into [0, pivot).  Zero rows dropped.
    ZMatrix hermite_rows() const;

    // Square with determinant +-1, i.e. rows are a lattice basis of Z^n.
    bool is_lattice_basis() const;

    const std::vector<std::vector<Z>>& data() const { return data_; }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Z>> data_;
};

struct SmithForm {
    ZMatrix u, d, v;
};

std::vector<Z> primitive_vector(const std::vector<Z>& v);  // divide by gcd, keep direction
std::vector<Q> q_vector(const std::vector<Z>& v);
Z dot(const std::vector<Z>& a, const std::vector<Z>& b);
Q dot(const std::vector<Q>& a, const std::vector<Q>& b);

}  // namespace addact
