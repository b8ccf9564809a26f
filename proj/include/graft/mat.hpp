#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "graft/rational.hpp"

namespace graft {

/// Dense exact-rational matrix, row-major. Zero-row and zero-column matrices
/// are legal values (they carry the 0-dimensional vector spaces).
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rational>> rows);

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Exact matrix product. Throws ShapeError naming both shapes on mismatch.
Mat mat_mul(const Mat& a, const Mat& b);

/// Kronecker product, a-index major: block (i,j) of the result is a(i,j)*b.
Mat kron(const Mat& a, const Mat& b);

/// Block-diagonal sum diag(a, b).
Mat direct_sum(const Mat& a, const Mat& b);

/// Linear dual of a map in the chosen bases: the transpose.
Mat dual(const Mat& a);

/// True iff a is square and of full rank over the rationals.
bool is_iso(const Mat& a);

/// Exact inverse when it exists.
std::optional<Mat> inverse(const Mat& a);

} // namespace graft
