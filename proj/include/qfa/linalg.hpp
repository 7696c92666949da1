#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfa {

using Complex = std::complex<double>;

// Default tolerances used across the toolkit.
inline constexpr double kNormTol = 1e-9;  // state-vector normalization
inline constexpr double kProbTol = 1e-9;  // probability sums
inline constexpr double kOpTol = 1e-9;    // unitarity / projector checks

/// Dense complex matrix, row-major.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("Matrix: entry count does not match dimensions");
    }

    /// Builds from nested initializer rows, e.g. Matrix::from_rows({{1,0},{0,1}}).
    static Matrix from_rows(const std::vector<std::vector<Complex>>& rows) {
        if (rows.empty()) return Matrix(0, 0);
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw std::invalid_argument("Matrix multiply: inner dimensions disagree");
        Matrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Complex a = (*this)(i, k);
                if (a == Complex{}) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& rhs) const {
        require_same_shape(rhs, "add");
        Matrix out = *this;
        for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
        return out;
    }

    Matrix operator-(const Matrix& rhs) const {
        require_same_shape(rhs, "subtract");
        Matrix out = *this;
        for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
        return out;
    }

    Matrix operator*(Complex s) const {
        Matrix out = *this;
        for (auto& e : out.entries_) e *= s;
        return out;
    }

    Matrix adjoint() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix conjugate() const {
        Matrix out = *this;
        for (auto& e : out.entries_) e = std::conj(e);
        return out;
    }

    /// Entrywise max modulus; the validation norm used everywhere.
    double norm_max() const {
        double m = 0.0;
        for (const auto& e : entries_) m = std::max(m, std::abs(e));
        return m;
    }

    bool operator==(const Matrix& rhs) const = default;

private:
    void require_same_shape(const Matrix& rhs, const char* op) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument(std::string("Matrix ") + op + ": shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Column state vector over C^dim.
class StateVector {
public:
    StateVector() = default;

    explicit StateVector(std::size_t dim) : amplitudes_(dim) {}

    explicit StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}

    /// |index> in a dim-dimensional space.
    static StateVector basis(std::size_t dim, std::size_t index) {
        StateVector v(dim);
        v.amplitudes_[index] = 1.0;
        return v;
    }

    std::size_t dim() const { return amplitudes_.size(); }

    Complex& operator[](std::size_t i) { return amplitudes_[i]; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

    double norm_sq() const {
        double s = 0.0;
        for (const auto& a : amplitudes_) s += std::norm(a);
        return s;
    }

    double norm() const { return std::sqrt(norm_sq()); }

    StateVector operator-(const StateVector& rhs) const {
        if (dim() != rhs.dim())
            throw std::invalid_argument("StateVector subtract: dimension mismatch");
        StateVector out = *this;
        for (std::size_t i = 0; i < amplitudes_.size(); ++i) out.amplitudes_[i] -= rhs.amplitudes_[i];
        return out;
    }

    bool operator==(const StateVector& rhs) const = default;

private:
    std::vector<Complex> amplitudes_;
};

/// <a|b>
inline Complex inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("inner: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline StateVector apply(const Matrix& m, const StateVector& v) {
    if (m.cols() != v.dim())
        throw std::invalid_argument("apply: matrix/vector dimension mismatch");
    StateVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

/// Kronecker product: block (i,j) of the result equals a(i,j) * b.
inline Matrix tensor(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex s = a(i, j);
            if (s == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
        }
    return out;
}

inline StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            out[i * b.dim() + j] = a[i] * b[j];
    return out;
}

/// True iff ||MM+ - I||_max <= tol and ||M+M - I||_max <= tol.
inline bool is_unitary(const Matrix& m, double tol = kOpTol) {
    if (!m.square())
        throw std::invalid_argument("is_unitary: matrix must be square");
    const Matrix id = Matrix::identity(m.rows());
    const Matrix adj = m.adjoint();
    return (m * adj - id).norm_max() <= tol && (adj * m - id).norm_max() <= tol;
}

/// True iff ||P - P+||_max <= tol and ||P^2 - P||_max <= tol.
inline bool is_projector(const Matrix& p, double tol = kOpTol) {
    if (!p.square())
        throw std::invalid_argument("is_projector: matrix must be square");
    return (p - p.adjoint()).norm_max() <= tol && (p * p - p).norm_max() <= tol;
}

/// Outcome probabilities ||P_i v||^2 of a projective measurement.
///
/// The family must consist of projectors summing to the identity with
/// pairwise orthogonal members, and v must be a unit vector; anything else
/// is rejected as a validation error.
inline std::vector<double> measure(const std::vector<Matrix>& family, const StateVector& v,
                                   double tol = kOpTol) {
    if (family.empty())
        throw std::invalid_argument("measure: empty projector family");
    const std::size_t n = v.dim();
    Matrix sum = Matrix::zero(n, n);
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Matrix& p = family[i];
        if (p.rows() != n || p.cols() != n)
            throw std::invalid_argument("measure: projector " + std::to_string(i) + " has wrong dimension");
        if (!is_projector(p, tol))
            throw std::invalid_argument("measure: member " + std::to_string(i) + " is not a projector");
        sum = sum + p;
    }
    if ((sum - Matrix::identity(n)).norm_max() > tol)
        throw std::invalid_argument("measure: projectors do not sum to the identity");
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if ((family[i] * family[j]).norm_max() > tol)
                throw std::invalid_argument("measure: projectors " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are not orthogonal");
    if (std::abs(v.norm() - 1.0) > kNormTol)
        throw std::invalid_argument("measure: state is not normalized");

    std::vector<double> probs;
    probs.reserve(family.size());
    for (const Matrix& p : family) probs.push_back(apply(p, v).norm_sq());
    return probs;
}

/// Size bound (1 + 2/theta)^(2n) for theta-separated unit-vector packings in C^n.
inline double packing_bound(double theta, std::size_t n) {
    if (!(theta > 0.0))
        throw std::invalid_argument("packing_bound: theta must be positive");
    if (n < 1)
        throw std::invalid_argument("packing_bound: n must be at least 1");
    return std::pow(1.0 + 2.0 / theta, 2.0 * static_cast<double>(n));
}

/// Orthonormal basis of the column space, by modified Gram-Schmidt.
/// Columns with residual norm below tol are dropped.
inline std::vector<StateVector> orthonormal_range(const Matrix& m, double tol = 1e-10) {
    std::vector<StateVector> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        StateVector v(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
        for (const auto& b : basis) {
            const Complex c = inner(b, v);
            for (std::size_t i = 0; i < v.dim(); ++i) v[i] -= c * b[i];
        }
        const double nrm = v.norm();
        if (nrm > tol) {
            for (std::size_t i = 0; i < v.dim(); ++i) v[i] /= nrm;
            basis.push_back(std::move(v));
        }
    }
    return basis;
}

}  // namespace qfa
