#include "dlp/ratmat.hpp"

#include <sstream>
#include <stdexcept>

namespace dlp {

RatMat::RatMat(int rows, int cols, const Rat& fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMat: negative dimension");
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Rat& RatMat::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("RatMat::at");
    return data_[static_cast<size_t>(i) * cols_ + j];
}

const Rat& RatMat::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("RatMat::at");
    return data_[static_cast<size_t>(i) * cols_ + j];
}

bool RatMat::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat RatMat::operator-() const {
    RatMat r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("RatMat: dimension mismatch in +");
    RatMat r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

RatMat operator-(const RatMat& a, const RatMat& b) { return a + (-b); }

RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMat: dimension mismatch in *");
    RatMat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

RatMat operator*(const Rat& c, const RatMat& a) {
    RatMat r = a;
    for (auto& x : r.data_) x = c * x;
    return r;
}

bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatMat RatMat::kron(const RatMat& a, const RatMat& b) {
    RatMat r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int p = 0; p < b.rows_; ++p)
                for (int q = 0; q < b.cols_; ++q)
                    r.at(i * b.rows_ + p, j * b.cols_ + q) = a.at(i, j) * b.at(p, q);
        }
    return r;
}

RatMat RatMat::hstack(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("RatMat::hstack: row mismatch");
    RatMat r(a.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
}

RatMat RatMat::vstack(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("RatMat::vstack: col mismatch");
    RatMat r(a.rows_ + b.rows_, a.cols_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, 0, b);
    return r;
}

RatMat RatMat::col(int j) const { return block(0, j, rows_, 1); }

RatMat RatMat::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    RatMat r(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (size_t i = 0; i < row_idx.size(); ++i)
        for (size_t j = 0; j < col_idx.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
    return r;
}

void RatMat::set_block(int i0, int j0, const RatMat& b) {
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

RatMat RatMat::block(int i0, int j0, int r, int c) const {
    RatMat out(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out.at(i, j) = at(i0 + i, j0 + j);
    return out;
}

RatMat RatMat::rref(std::vector<int>* pivots) const {
    RatMat m = *this;
    if (pivots) pivots->clear();
    int lead = 0;
    for (int j = 0; j < cols_ && lead < rows_; ++j) {
        int piv = -1;
        for (int i = lead; i < rows_; ++i)
            if (!m.at(i, j).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        for (int c = 0; c < cols_; ++c) std::swap(m.at(piv, c), m.at(lead, c));
        Rat inv = m.at(lead, j).inv();
        for (int c = 0; c < cols_; ++c) m.at(lead, c) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == lead || m.at(i, j).is_zero()) continue;
            Rat f = m.at(i, j);
            for (int c = 0; c < cols_; ++c) m.at(i, c) -= f * m.at(lead, c);
        }
        if (pivots) pivots->push_back(j);
        ++lead;
    }
    return m;
}

int RatMat::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return static_cast<int>(piv.size());
}

RatMat RatMat::nullspace() const {
    std::vector<int> piv;
    RatMat r = rref(&piv);
    std::vector<bool> is_piv(static_cast<size_t>(cols_), false);
    for (int j : piv) is_piv[static_cast<size_t>(j)] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < cols_; ++j)
        if (!is_piv[static_cast<size_t>(j)]) free_cols.push_back(j);
    RatMat ns(cols_, static_cast<int>(free_cols.size()));
    for (size_t f = 0; f < free_cols.size(); ++f) {
        int fc = free_cols[f];
        ns.at(fc, static_cast<int>(f)) = Rat(1);
        for (size_t pi = 0; pi < piv.size(); ++pi)
            ns.at(piv[pi], static_cast<int>(f)) = -r.at(static_cast<int>(pi), fc);
    }
    return ns;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat::inverse: not square");
    std::vector<int> piv;
    RatMat aug = hstack(*this, identity(rows_)).rref(&piv);
    // All pivots must land in the left block; a pivot in the identity part
    // means this matrix is rank deficient.
    bool ok = static_cast<int>(piv.size()) >= rows_;
    for (int i = 0; ok && i < rows_; ++i) ok = piv[static_cast<size_t>(i)] < cols_;
    if (!ok) throw std::domain_error("RatMat::inverse: singular matrix");
    return aug.block(0, cols_, rows_, cols_);
}

Rat RatMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat::det: not square");
    RatMat m = *this;
    Rat d(1);
    for (int j = 0; j < cols_; ++j) {
        int piv = -1;
        for (int i = j; i < rows_; ++i)
            if (!m.at(i, j).is_zero()) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != j) {
            for (int c = 0; c < cols_; ++c) std::swap(m.at(piv, c), m.at(j, c));
            d = -d;
        }
        d *= m.at(j, j);
        Rat inv = m.at(j, j).inv();
        for (int i = j + 1; i < rows_; ++i) {
            if (m.at(i, j).is_zero()) continue;
            Rat f = m.at(i, j) * inv;
            for (int c = j; c < cols_; ++c) m.at(i, c) -= f * m.at(j, c);
        }
    }
    return d;
}

std::string RatMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[ ";
        for (int j = 0; j < cols_; ++j) os << at(i, j).str() << " ";
        os << "]\n";
    }
    return os.str();
}

}  // namespace dlp
