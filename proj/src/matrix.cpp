#include "socv/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace socv {

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

static void check_same_dim(const Matrix& a, const Matrix& b, const char* op) {
    if (a.dim() != b.dim())
        throw DimensionMismatch(std::string("Matrix ") + op + ": dims " +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_dim(*this, o, "+");
    Matrix r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_dim(*this, o, "-");
    Matrix r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_dim(*this, o, "*");
    Matrix r(n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < n_; ++j) r(i, j) += aik * o(k, j);
        }
    }
    return r;
}

Matrix operator*(Complex s, const Matrix& m) {
    Matrix r(m.n_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = s * m.a_[k];
    return r;
}

Vector Matrix::operator*(const Vector& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw DimensionMismatch("Matrix*Vector: size mismatch");
    Vector y(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        Complex s{};
        for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const Complex& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::max_hermitian_defect() const {
    double d = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

Complex dot(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw DimensionMismatch("dot: size mismatch");
    Complex s{};
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

} // namespace socv
