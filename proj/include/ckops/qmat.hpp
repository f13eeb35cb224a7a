#pragma once

#include "ckops/exact.hpp"

#include <vector>

namespace ck {

// Dense matrix over Coefficient; sizes here are tiny (catalog bases).
class QMat {
  public:
    QMat() : rows_(0), cols_(0) {}
    QMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMat identity(size_t n) {
        QMat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Coefficient(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Coefficient& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Coefficient& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const QMat& o) const;
    QMat scaled(const Coefficient& c) const;
    bool operator==(const QMat& o) const;
    bool operator!=(const QMat& o) const { return !(*this == o); }
    bool is_zero() const;

    std::vector<Coefficient> apply(const std::vector<Coefficient>& x) const;  // column vector
    QMat pow(unsigned e) const;

    // Kronecker product (basis of the product ordered row-major: left index major).
    static QMat kron(const QMat& a, const QMat& b);

  private:
    size_t rows_, cols_;
    std::vector<Coefficient> data_;
};

// Inverse of r*(I + N) with N nilpotent and r a unit coefficient; throws
// inversion_error when the scalar part is not invertible and domain_error
// when the remainder fails to be nilpotent within `bound` steps.
QMat invert_unipotent(const QMat& m, const Coefficient& unit_part, unsigned bound);

}  // namespace ck
