#ifndef SOCV_MATRIX_HPP
#define SOCV_MATRIX_HPP

#include <complex>
#include <vector>

#include "socv/errors.hpp"

namespace socv {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Dense square complex matrix, row-major. Plain value type with just the
/// arithmetic the lab needs; Hermitian structure is layered on top by
/// HermitianMatrix.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
        if (n < 1) throw DimensionMismatch("Matrix: dim must be >= 1");
    }

    static Matrix identity(int n);

    int dim() const { return n_; }

    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

    Matrix adjoint() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;   // matrix product
    friend Matrix operator*(Complex s, const Matrix& m);

    Vector operator*(const Vector& x) const;

    double max_abs() const;                    // max entrywise modulus
    double max_hermitian_defect() const;       // max |a_ij - conj(a_ji)|

private:
    int n_ = 0;
    std::vector<Complex> a_;
};

Complex dot(const Vector& x, const Vector& y);  // sum x_i * conj(y_i)

} // namespace socv

#endif
