#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace scopelab {

using Complex = std::complex<double>;

// Dense row-major complex matrix with optional tensor-factor metadata.
//
// The `dims` vector records how the row (and, for square matrices, column)
// index factorizes into subsystems; structural operations such as partial
// trace and partial transpose require it.  An empty `dims` means "one
// unstructured system".
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix from_rows(
        std::initializer_list<std::initializer_list<Complex>> rows);
    // n x 1 column from a coefficient vector.
    static ComplexMatrix column(const std::vector<Complex>& v);
    // Dyad |u><v| from two coefficient vectors.
    static ComplexMatrix outer(const std::vector<Complex>& u,
                               const std::vector<Complex>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    Complex& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const Complex& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    const std::vector<std::size_t>& dims() const { return dims_; }
    void set_dims(std::vector<std::size_t> dims);
    ComplexMatrix with_dims(std::vector<std::size_t> dims) const;

    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;  // matrix product
    ComplexMatrix operator*(Complex scalar) const;
    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scalar);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    Complex trace() const;
    double max_abs() const;          // largest entry modulus
    double frobenius_norm() const;

    // Largest |A - A†| entry relative to max|A|; 0 for the zero matrix.
    double hermiticity_defect() const;
    bool is_square() const { return rows_ == cols_; }

    // A * v for a coefficient vector.
    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
    std::vector<std::size_t> dims_;
};

inline ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) {
    return m * scalar;
}

// <u|v> with conjugation on the first argument.
Complex inner(const std::vector<Complex>& u, const std::vector<Complex>& v);
double norm2(const std::vector<Complex>& v);  // Σ|v_i|²

}  // namespace scopelab
