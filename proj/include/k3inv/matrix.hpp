#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <vector>

#include "k3inv/error.hpp"

namespace k3inv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense row-major matrix over an exact scalar type (Int or Rat).
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = int(init.size());
        cols_ = rows_ ? int(init.begin()->size()) : 0;
        data_.reserve(size_t(rows_) * cols_);
        for (const auto& row : init) {
            if (int(row.size()) != cols_)
                throw Error(Errc::dimension_mismatch, "ragged initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    std::vector<T> row(int r) const {
        std::vector<T> out(cols_);
        for (int c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
        return out;
    }
    std::vector<T> col(int c) const {
        std::vector<T> out(rows_);
        for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int r = 0; r < rows_; ++r)
            for (int c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_)
            throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
        Mat out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend std::vector<T> operator*(const Mat& a, const std::vector<T>& v) {
        if (a.cols_ != int(v.size()))
            throw Error(Errc::dimension_mismatch, "matrix-vector shape mismatch");
        std::vector<T> out(a.rows_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j)
                if (a(i, j) != 0) out[i] += a(i, j) * v[j];
        return out;
    }

    friend Mat operator+(const Mat& a, const Mat& b) { return zipped(a, b, +1); }
    friend Mat operator-(const Mat& a, const Mat& b) { return zipped(a, b, -1); }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

private:
    static Mat zipped(const Mat& a, const Mat& b, int sign) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(Errc::dimension_mismatch, "matrix sum shape mismatch");
        Mat out(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i)
            out.data_[i] = a.data_[i] + T(sign) * b.data_[i];
        return out;
    }

    int rows_, cols_;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

RatMat to_rational(const IntMat& m);
RatVec to_rational(const IntVec& v);

/// Clears denominators and divides by the content; the zero vector maps to itself.
IntVec primitive_integer_vector(const RatVec& v);

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
/// Throws Errc::degenerate_lattice if singular.
RatMat rational_inverse(const RatMat& m);

/// Determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMat& m);

} // namespace k3inv
