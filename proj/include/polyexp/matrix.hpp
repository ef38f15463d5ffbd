#pragma once

#include <optional>
#include <vector>

#include "polyexp/poly.hpp"

namespace polyexp {

using Column = std::vector<GaussianRational>;

/// Dense matrix over the Gaussian rationals, row-major. All operations are
/// exact; sizes stay at desk scale so plain Gaussian elimination is enough.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols);

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);
    static Matrix from_columns(const std::vector<Column>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const GaussianRational& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    Column column(int j) const;
    Matrix transposed() const;
    /// [this | other], side by side. Row counts must match.
    Matrix augmented(const Matrix& other) const;

    Matrix pow(int e) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const GaussianRational& c, const Matrix& m);
    friend Column operator*(const Matrix& m, const Column& v);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    bool is_zero() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> entries_;
};

struct RowEchelon {
    Matrix reduced;
    std::vector<int> pivots;  // pivot column indices, strictly increasing
};

RowEchelon rref(const Matrix& m);
int rank(const Matrix& m);

/// One solution of A x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Column> solve(const Matrix& a, const Column& b);

/// Basis of the nullspace of m (possibly empty).
std::vector<Column> kernel(const Matrix& m);

/// Coordinates of v in the given spanning vectors, or nullopt when v is
/// outside their span.
std::optional<Column> span_coordinates(const Column& v, const std::vector<Column>& basis);

/// p evaluated at a square matrix (Horner).
Matrix eval_poly(const Poly& p, const Matrix& m);

/// Monic polynomial of minimal degree annihilating the square matrix,
/// computed as the lcm of the Krylov annihilators of the standard basis
/// vectors. Returned expanded; factoring is the caller's problem.
Poly minimal_polynomial(const Matrix& m);

}  // namespace polyexp
