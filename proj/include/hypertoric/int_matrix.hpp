#pragma once
#include "hypertoric/errors.hpp"
#include "hypertoric/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hypertoric {

// Dense matrix with exact integer entries, row-major. Empty shapes
// (0 x k, k x 0) are legal; they show up as kernels of injective maps and
// as the data of a point.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw error(errc::invalid_input, "ragged initializer");
            for (long long x : r) data_.emplace_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVec row(std::size_t i) const {
        return IntVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    IntVec col(std::size_t j) const {
        IntVec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_row(std::size_t i, const IntVec& v) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw error(errc::dimension_mismatch, "matrix product shape");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    IntVec apply(const IntVec& v) const {
        if (v.size() != cols_) throw error(errc::dimension_mismatch, "matrix-vector shape");
        IntVec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Int& x : data_)
            if (x != 0) return false;
        return true;
    }

    IntMatrix select_rows(const std::vector<std::size_t>& idx) const {
        IntMatrix m(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
        return m;
    }
    IntMatrix select_cols(const std::vector<std::size_t>& idx) const {
        IntMatrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    // Block diagonal sum, used for product data.
    static IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
        std::size_t r = 0, c = 0;
        for (const auto& b : blocks) { r += b.rows(); c += b.cols(); }
        IntMatrix m(r, c);
        std::size_t ro = 0, co = 0;
        for (const auto& b : blocks) {
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) m(ro + i, co + j) = b(i, j);
            ro += b.rows();
            co += b.cols();
        }
        return m;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ' ';
                s += (*this)(i, j).str();
            }
            s += '\n';
        }
        return s;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

} // namespace hypertoric
