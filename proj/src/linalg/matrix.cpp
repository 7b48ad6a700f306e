#include "atlas/linalg/matrix.hpp"

#include <algorithm>
#include <string>

namespace atlas::linalg {

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b, const char* what)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": shape mismatch");
    }
}

} // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ragged initializer for RationalMatrix");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> entries)
{
    RationalMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows)
{
    if (rows.empty()) {
        return {};
    }
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            throw DimensionError("from_rows: ragged rows");
        }
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols)
{
    if (cols.empty()) {
        return {};
    }
    RationalMatrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_) {
            throw DimensionError("from_columns: ragged columns");
        }
        for (std::size_t i = 0; i < m.rows_; ++i) {
            m(i, j) = cols[j][i];
        }
    }
    return m;
}

RationalMatrix RationalMatrix::from_entries(std::size_t rows, std::size_t cols, RationalVector entries)
{
    if (entries.size() != rows * cols) {
        throw DimensionError("from_entries: entry count does not match shape");
    }
    RationalMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(entries);
    return m;
}

RationalVector RationalMatrix::column(std::size_t j) const
{
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = (*this)(i, j);
    }
    return out;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

Rational RationalMatrix::trace() const
{
    if (rows_ != cols_) {
        throw DimensionError("trace of a non-square matrix");
    }
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

bool RationalMatrix::is_zero() const
{
    return linalg::is_zero(data_);
}

bool RationalMatrix::is_symmetric() const
{
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other)
{
    require_same_shape(*this, other, "operator+=");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (sgn(other.data_[k]) != 0) {
            data_[k] += other.data_[k];
        }
    }
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other)
{
    require_same_shape(*this, other, "operator-=");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (sgn(other.data_[k]) != 0) {
            data_[k] -= other.data_[k];
        }
    }
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar)
{
    if (sgn(scalar) == 0) {
        std::fill(data_.begin(), data_.end(), Rational(0));
        return *this;
    }
    for (auto& x : data_) {
        if (sgn(x) != 0) {
            x *= scalar;
        }
    }
    return *this;
}

// Zero-skipping product: derivation matrices are sparse.
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_) {
        throw DimensionError("matrix product: inner dimensions differ");
    }
    RationalMatrix c(a.rows_, b.cols_);
    Rational t;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (sgn(bkj) == 0) {
                    continue;
                }
                t = aik * bkj;
                c(i, j) += t;
            }
        }
    }
    return c;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v)
{
    if (a.cols_ != v.size()) {
        throw DimensionError("matrix-vector product: size mismatch");
    }
    RationalVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) {
                out[i] += a(i, j) * v[j];
            }
        }
    }
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y)
{
    return x * y - y * x;
}

} // namespace atlas::linalg
