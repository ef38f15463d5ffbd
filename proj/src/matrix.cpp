#include "polyexp/matrix.hpp"

#include <algorithm>

namespace polyexp {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0)
        throw Error("matrix with negative dimension");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = GaussianRational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw Error("ragged rows in matrix literal");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Column>& cols) {
    int c = static_cast<int>(cols.size());
    int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
    Matrix m(r, c);
    for (int j = 0; j < c; ++j) {
        if (static_cast<int>(cols[j].size()) != r)
            throw Error("ragged columns in matrix literal");
        for (int i = 0; i < r; ++i)
            m.at(i, j) = cols[j][i];
    }
    return m;
}

Column Matrix::column(int j) const {
    Column v(rows_);
    for (int i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

Matrix Matrix::transposed() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::augmented(const Matrix& other) const {
    if (rows_ != other.rows_)
        throw Error("augmenting matrices with different row counts");
    Matrix m(rows_, cols_ + other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            m.at(i, j) = at(i, j);
        for (int j = 0; j < other.cols_; ++j)
            m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const GaussianRational& e) { return e.is_zero(); });
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("matrix dimension mismatch in addition");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k)
        m.entries_[k] = a.entries_[k] + b.entries_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("matrix dimension mismatch in subtraction");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k)
        m.entries_[k] = a.entries_[k] - b.entries_[k];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw Error("matrix dimension mismatch in multiplication");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (int j = 0; j < b.cols_; ++j)
                m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

Matrix operator*(const GaussianRational& c, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k)
        out.entries_[k] = c * m.entries_[k];
    return out;
}

Column operator*(const Matrix& m, const Column& v) {
    if (m.cols_ != static_cast<int>(v.size()))
        throw Error("matrix dimension mismatch in vector product");
    Column out(m.rows_);
    for (int i = 0; i < m.rows_; ++i)
        for (int j = 0; j < m.cols_; ++j)
            out[i] += m.at(i, j) * v[j];
    return out;
}

Matrix Matrix::pow(int e) const {
    if (rows_ != cols_)
        throw Error("power of a non-square matrix");
    if (e < 0)
        throw Error("negative matrix power");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

RowEchelon rref(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < r.rows(); ++i)
            if (!r.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        for (int j = 0; j < r.cols(); ++j)
            std::swap(r.at(row, j), r.at(pivot, j));
        GaussianRational inv = r.at(row, col).inv();
        for (int j = col; j < r.cols(); ++j)
            r.at(row, j) = inv * r.at(row, j);
        for (int i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero())
                continue;
            GaussianRational factor = r.at(i, col);
            for (int j = col; j < r.cols(); ++j)
                r.at(i, j) -= factor * r.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

int rank(const Matrix& m) {
    return static_cast<int>(rref(m).pivots.size());
}

std::optional<Column> solve(const Matrix& a, const Column& b) {
    if (a.rows() != static_cast<int>(b.size()))
        throw Error("matrix dimension mismatch in solve");
    Matrix rhs(a.rows(), 1);
    for (int i = 0; i < a.rows(); ++i)
        rhs.at(i, 0) = b[i];
    RowEchelon re = rref(a.augmented(rhs));
    for (int p : re.pivots)
        if (p == a.cols())
            return std::nullopt;  // pivot in the constant column
    Column x(a.cols());
    for (std::size_t i = 0; i < re.pivots.size(); ++i)
        x[re.pivots[i]] = re.reduced.at(static_cast<int>(i), a.cols());
    return x;
}

std::vector<Column> kernel(const Matrix& m) {
    RowEchelon re = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : re.pivots)
        is_pivot[p] = true;
    std::vector<Column> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j])
            continue;
        Column v(m.cols());
        v[j] = GaussianRational(1);
        for (std::size_t i = 0; i < re.pivots.size(); ++i)
            v[re.pivots[i]] = -re.reduced.at(static_cast<int>(i), j);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Column> span_coordinates(const Column& v, const std::vector<Column>& basis) {
    if (basis.empty()) {
        bool zero = std::all_of(v.begin(), v.end(),
                                [](const GaussianRational& e) { return e.is_zero(); });
        if (zero)
            return Column{};
        return std::nullopt;
    }
    return solve(Matrix::from_columns(basis), v);
}

Matrix eval_poly(const Poly& p, const Matrix& m) {
    if (m.rows() != m.cols())
        throw Error("polynomial evaluation at a non-square matrix");
    Matrix acc(m.rows(), m.cols());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        for (int i = 0; i < m.rows(); ++i)
            acc.at(i, i) += p.coeff(k);
    }
    return acc;
}

namespace {

// Monic annihilator of v under m: the dependency of the first Krylov vector
// that falls into the span of its predecessors.
Poly krylov_annihilator(const Matrix& m, const Column& v) {
    std::vector<Column> chain;
    Column cur = v;
    while (true) {
        if (auto coords = span_coordinates(cur, chain)) {
            std::vector<GaussianRational> c(chain.size() + 1);
            for (std::size_t j = 0; j < coords->size(); ++j)
                c[j] = -(*coords)[j];
            c[chain.size()] = GaussianRational(1);
            return Poly(std::move(c));
        }
        chain.push_back(cur);
        cur = m * cur;
    }
}

}  // namespace

Poly minimal_polynomial(const Matrix& m) {
    if (m.rows() != m.cols())
        throw Error("minimal polynomial of a non-square matrix");
    int n = m.rows();
    Poly result{GaussianRational(1)};
    for (int i = 0; i < n; ++i) {
        Column e(n);
        e[i] = GaussianRational(1);
        Poly q = krylov_annihilator(m, e);
        Poly g = gcd(result, q);
        result = (result * q) / g;
        if (result.degree() == n)
            break;
    }
    result = result.monic();
    if (!eval_poly(result, m).is_zero())
        throw Error("minimal polynomial candidate fails to annihilate");
    return result;
}

}  // namespace polyexp
