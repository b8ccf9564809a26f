#include "graft/mat.hpp"

#include <sstream>

#include "graft/errors.hpp"

namespace graft {

namespace {

std::string shape_str(const Mat& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// In-place Gaussian elimination; returns the rank. When inv is non-null the
// matrix must be square and *inv accumulates the row operations (so it holds
// the inverse exactly when the rank is full).
std::size_t eliminate(Mat& a, Mat* inv) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
            if (inv)
                for (std::size_t c = 0; c < inv->cols(); ++c)
                    std::swap(inv->at(pivot, c), inv->at(rank, c));
        }
        const Rational p = a.at(rank, col);
        for (std::size_t c = 0; c < cols; ++c) a.at(rank, c) /= p;
        if (inv)
            for (std::size_t c = 0; c < inv->cols(); ++c) inv->at(rank, c) /= p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a.at(r, col) == 0) continue;
            const Rational factor = a.at(r, col);
            for (std::size_t c = 0; c < cols; ++c) a.at(r, c) -= factor * a.at(rank, c);
            if (inv)
                for (std::size_t c = 0; c < inv->cols(); ++c)
                    inv->at(r, c) -= factor * inv->at(rank, c);
        }
        ++rank;
    }
    return rank;
}

} // namespace

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeError("ragged initializer rows");
        for (const auto& v : row) entries_.push_back(v);
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::string Mat::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) out << "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << " ";
            out << at(r, c);
        }
    }
    out << "]";
    return out.str();
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows())
        throw ShapeError("mat_mul shape mismatch: " + shape_str(a) + " * " + shape_str(b));
    Mat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a.at(i, j);
            if (aij == 0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    out.at(i * b.rows() + r, j * b.cols() + c) = aij * b.at(r, c);
        }
    return out;
}

Mat direct_sum(const Mat& a, const Mat& b) {
    Mat out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    return out;
}

Mat dual(const Mat& a) {
    Mat out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(c, r) = a.at(r, c);
    return out;
}

bool is_iso(const Mat& a) {
    if (a.rows() != a.cols()) return false;
    Mat work = a;
    return eliminate(work, nullptr) == a.rows();
}

std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    Mat work = a;
    Mat inv = Mat::identity(a.rows());
    if (eliminate(work, &inv) != a.rows()) return std::nullopt;
    return inv;
}

} // namespace graft
