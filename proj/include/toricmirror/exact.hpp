#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmir {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Raised for every recoverable failure of a library precondition. `kind` is a
// short machine-readable tag surfaced by the CLI.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
        std::size_t c = rows.empty() ? cols : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw DomainError("dimension_mismatch", "ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_cols(const std::vector<std::vector<T>>& cols, std::size_t rows = 0) {
        return from_rows(cols, rows).transpose();
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<std::vector<T>> row_list() const {
        std::vector<std::vector<T>> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }
    std::vector<std::vector<T>> col_list() const {
        std::vector<std::vector<T>> out;
        for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
        return out;
    }
    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DomainError("dimension_mismatch", "matrix product shape");
        Matrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if ((*this)(i, k) == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += (*this)(i, k) * o(k, j);
            }
        return p;
    }
    std::vector<T> operator*(const std::vector<T>& v) const {
        if (v.size() != cols_) throw DomainError("dimension_mismatch", "matrix-vector product shape");
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

// ---- vector helpers -------------------------------------------------------

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
RatVec to_rat(const IntVec& v);
RatMatrix to_rat(const IntMatrix& m);
bool is_integral(const RatVec& v);
// num / den in lowest terms (the two-argument mpq constructor does not reduce).
Rat ratio(const Int& num, const Int& den);
IntVec to_int(const RatVec& v);  // requires integral entries
// Positive multiple of v with coprime integer entries. Zero maps to zero.
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);
Int gcd_of(const IntVec& v);
bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, const Int& k);
IntVec neg(const IntVec& a);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& k);
IntVec unit_vector(std::size_t n, std::size_t i);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

// ---- normal forms and lattices --------------------------------------------

struct HermiteResult {
    IntMatrix H;  // row Hermite normal form
    IntMatrix U;  // unimodular, U * A == H
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each non-zero row
};

// Row-style HNF: non-zero rows on top, positive pivots strictly moving right,
// entries above each pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& A);

// Saturated basis of {v in Z^cols : A v = 0}, returned in HNF-canonical form.
std::vector<IntVec> kernel_basis(const IntMatrix& A);

std::size_t rank(const IntMatrix& A);
std::size_t rank(const RatMatrix& A);
Rat determinant(const RatMatrix& A);
Int determinant(const IntMatrix& A);

IntMatrix unimodular_inverse(const IntMatrix& A);
std::optional<RatMatrix> rational_inverse(const RatMatrix& A);

// One solution of A x = b (free variables set to zero), or absent.
std::optional<RatVec> solve_linear(const RatMatrix& A, const RatVec& b);

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& A);

// Saturation of the lattice spanned by the given vectors: the lattice of all
// integer points in their rational span. Basis returned HNF-canonical.
std::vector<IntVec> saturate(const std::vector<IntVec>& gens, std::size_t dim);
// HNF-canonical basis of the lattice spanned by gens (not saturated).
std::vector<IntVec> lattice_basis(const std::vector<IntVec>& gens, std::size_t dim);

// ---- exact linear programming -------------------------------------------

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    RatVec x;
    Rat value;
};

// maximise c.x subject to A x = b, x >= 0. Two-phase simplex with Bland's rule.
LpResult lp_maximize(const RatMatrix& A, const RatVec& b, const RatVec& c);

// Coefficients a_i (> 0 when strict, >= 0 otherwise) with sum a_i gens_i = target.
std::optional<RatVec> positive_combination(const std::vector<RatVec>& gens, const RatVec& target,
                                           bool strict);

// Weights lambda_{i,k} >= 0 with sum_k lambda_{i,k} = 1 per group i and
// sum_{i,k} lambda_{i,k} points_{i,k} = target. Returns the chosen points.
std::optional<std::vector<RatVec>> convex_selection(const std::vector<std::vector<RatVec>>& groups,
                                                    const RatVec& target);

}  // namespace tmir
