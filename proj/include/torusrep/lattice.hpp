#pragma once

// Exact integer and rational matrices: Hermite and Smith normal forms,
// rank, and sublattice membership. Rows are vectors, lattices are row spans.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace torusrep {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
        if (factor == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) {
            const T& s = (*this)(src, j);
            if (s != 0) (*this)(dst, j) += factor * s;
        }
    }

    // col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
        if (factor == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) {
            const T& s = (*this)(i, src);
            if (s != 0) (*this)(i, dst) += factor * s;
        }
    }

    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const T& x = a(i, l);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& y = b(l, j);
                    if (y != 0) p(i, j) += x * y;
                }
            }
        return p;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
        Matrix d = a;
        for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] -= b.data_[i];
        return d;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        Matrix d = a;
        for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] += b.data_[i];
        return d;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

struct HermiteForm {
    IntMatrix h;  // row Hermite normal form of the input
    IntMatrix u;  // unimodular, u * m == h
};

/// Row Hermite normal form with its unimodular transform. Pivots are
/// positive and entries above each pivot lie in [0, pivot).
HermiteForm hnf(const IntMatrix& m);

/// Smith invariant factors d1 | d2 | ... followed by zeros, min(rows, cols) entries.
std::vector<Integer> snf(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RationalMatrix& m);

Integer determinant(const IntMatrix& m);

/// Nonzero rows of the HNF: a canonical basis of the row lattice.
IntMatrix lattice_basis(const IntMatrix& gens);

/// True iff v is an integer combination of the rows of gens.
/// Throws std::invalid_argument when v.size() != gens.cols().
bool in_sublattice(std::span<const Integer> v, const IntMatrix& gens);

/// Membership test against a basis already in HNF (as returned by lattice_basis).
bool in_hnf_lattice(std::span<const Integer> v, const IntMatrix& basis);

/// Basis of the right null space {x : m x = 0}, one vector per free column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Scales a rational vector to the primitive integer vector on the same ray.
IntVector primitive_integer_vector(std::span<const Rational> v);

/// Divides an integer vector by the gcd of its entries (zero vector unchanged).
IntVector primitive(std::span<const Integer> v);

RationalMatrix to_rational(const IntMatrix& m);

/// "p/q" or "p"; parse_rational accepts the same forms and throws std::invalid_argument otherwise.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace torusrep
