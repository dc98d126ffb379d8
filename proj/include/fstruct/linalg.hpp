#pragma once

#include <optional>
#include <vector>

#include "fstruct/scalar.hpp"

namespace fstruct {

using SVec = std::vector<Scalar>;

SVec svec_zero(int n);
SVec svec_add(const SVec& a, const SVec& b);
SVec svec_sub(const SVec& a, const SVec& b);
SVec svec_scale(const Scalar& c, const SVec& a);
bool svec_approx_equal(const SVec& a, const SVec& b);
Scalar svec_max_abs(const SVec& a);

/// Dense row-major matrix of Scalar. Doubles as EndoField (n x n, acting
/// on coefficient vectors by column convention: (A v)_i = sum_j A(i,j) v_j).
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    Matrix transposed() const;
    SVec apply(const SVec& v) const;  // A v
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    SVec flatten() const { return a_; }
    static Matrix from_flat(int rows, int cols, const SVec& v);

    Scalar max_abs() const;
    bool all_exact() const;

private:
    int rows_, cols_;
    SVec a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);  // [A,B] = AB - BA

Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// Exact rank when every entry is rational; singular-value thresholding at
/// tol * sigma_max otherwise.
int matrix_rank(const Matrix& m);

/// Basis of { v : A v = 0 }. Exact elimination or SVD per entry exactness.
std::vector<SVec> null_space(const Matrix& m);

/// All leading principal minors strictly positive (positive definiteness).
bool positive_definite(const Matrix& m);

/// Cyclic Jacobi eigendecomposition of a symmetric double matrix.
/// Returns eigenvalues and the matrix of eigenvectors (as columns).
void jacobi_eigen_sym(const std::vector<std::vector<double>>& a,
                      std::vector<double>& eigvals,
                      std::vector<std::vector<double>>& eigvecs);

/// Incrementally grown linear span with exact (RREF) or float
/// (Gram-Schmidt + relative threshold) dependence testing.
class SpanBuilder {
public:
    /// Returns true when v enlarged the span.
    bool insert(const SVec& v);
    int dim() const { return int(basis_.size()); }
    const std::vector<SVec>& reduced_basis() const { return basis_; }

private:
    std::vector<SVec> basis_;       // reduced rows (exact) or orthonormal rows (float)
    std::vector<int> pivot_cols_;   // exact path
};

}  // namespace fstruct
