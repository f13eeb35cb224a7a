#include "ckops/qmat.hpp"

namespace ck {

QMat QMat::operator+(const QMat& o) const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw domain_error("QMat: size mismatch in product");
    QMat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t t = 0; t < cols_; ++t) {
            if (at(i, t).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, t) * o.at(t, j);
        }
    return r;
}

QMat QMat::scaled(const Coefficient& c) const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
    return r;
}

bool QMat::operator==(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

bool QMat::is_zero() const {
    for (const auto& c : data_)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<Coefficient> QMat::apply(const std::vector<Coefficient>& x) const {
    if (x.size() != cols_) throw domain_error("QMat: size mismatch in apply");
    std::vector<Coefficient> r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !x[j].is_zero()) r[i] += at(i, j) * x[j];
    return r;
}

QMat QMat::pow(unsigned e) const {
    QMat r = identity(rows_);
    QMat base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

QMat QMat::kron(const QMat& a, const QMat& b) {
    QMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (size_t s = 0; s < b.rows(); ++s)
                for (size_t t = 0; t < b.cols(); ++t)
                    r.at(i * b.rows() + s, j * b.cols() + t) = a.at(i, j) * b.at(s, t);
        }
    return r;
}

QMat invert_unipotent(const QMat& m, const Coefficient& unit_part, unsigned bound) {
    const size_t n = m.rows();
    Coefficient rinv = unit_part.unit_inverse();
    QMat nil = m.scaled(rinv) - QMat::identity(n);  // must be nilpotent
    QMat sum = QMat::identity(n);
    QMat term = QMat::identity(n);
    unsigned steps = 0;
    for (;;) {
        term = term * nil;
        if (term.is_zero()) break;
        if (++steps > bound) throw domain_error("invert_unipotent: not nilpotent within bound");
        if (steps & 1)
            sum = sum - term;
        else
            sum = sum + term;
    }
    QMat inv = sum.scaled(rinv);
    if (inv * m != QMat::identity(n)) throw inversion_error("invert_unipotent: verification failed");
    return inv;
}

}  // namespace ck
