/**
 * @file matrix.hpp
 * @brief Small dense matrices over exact scalars, plus a thread-pool helper.
 */
#pragma once

#include "mpk/poly.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace mpk {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    void set_row(std::size_t i, const std::vector<T>& v) {
        if (v.size() != cols_) throw std::invalid_argument("row length");
        std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
    }
    Matrix transpose() const {
        Matrix t(cols_, rows_, data_.empty() ? T() : data_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using PolyMatrix = Matrix<Poly>;
using IntMatrix = Matrix<Int>;

/// a * b over polynomials.
PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b);
/// a * b with an integer right factor.
PolyMatrix mul(const PolyMatrix& a, const IntMatrix& b);
PolyMatrix mul(const IntMatrix& a, const PolyMatrix& b);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
PolyMatrix to_poly(const IntMatrix& m, const RingPtr& ring);

/// Inverse of an upper or lower unitriangular matrix; throws if neither.
PolyMatrix unitriangular_inverse(const PolyMatrix& m);
IntMatrix unitriangular_inverse(const IntMatrix& m);

/// Solves x * a = b for a row vector x by fraction-free elimination.
/// Returns (d, y) with x = y / d and d = +-det(a).
std::pair<Poly, std::vector<Poly>> solve_left(const PolyMatrix& a, const std::vector<Poly>& b);

/// Runs body(i) for i in [0, count) on up to @p jobs threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

/// Default parallelism (hardware concurrency, at least 1).
unsigned default_jobs();

}  // namespace mpk
