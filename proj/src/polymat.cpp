#include "dlp/polymat.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlp {

PolyMat::PolyMat(int rows, int cols, int grade) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0 || grade < 0)
        throw std::invalid_argument("PolyMat: bad dimensions");
    coeffs_.assign(static_cast<size_t>(grade) + 1, RatMat(rows, cols));
}

PolyMat::PolyMat(std::vector<RatMat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("PolyMat: empty coefficient list");
    rows_ = coeffs_[0].rows();
    cols_ = coeffs_[0].cols();
    for (const auto& c : coeffs_)
        if (c.rows() != rows_ || c.cols() != cols_)
            throw std::invalid_argument("PolyMat: inconsistent coefficient sizes");
}

PolyMat PolyMat::from_constant(const RatMat& c, int grade) {
    PolyMat p(c.rows(), c.cols(), grade);
    p.coeffs_[0] = c;
    return p;
}

PolyMat PolyMat::from_scalar(const SPoly& s) {
    PolyMat p(1, 1, s.grade());
    for (int i = 0; i <= s.grade(); ++i) p.coeffs_[i].at(0, 0) = s.coeff(i);
    return p;
}

PolyMat PolyMat::vandermonde_vector(int k) {
    if (k < 1) throw std::invalid_argument("vandermonde_vector: k must be positive");
    PolyMat v(k, 1, k - 1);
    for (int i = 0; i < k; ++i) v.coeffs_[k - 1 - i].at(i, 0) = Rat(1);
    return v;
}

const RatMat& PolyMat::coeff(int i) const {
    if (i < 0 || i > grade()) throw std::out_of_range("PolyMat::coeff");
    return coeffs_[static_cast<size_t>(i)];
}

RatMat& PolyMat::coeff(int i) {
    if (i < 0 || i > grade()) throw std::out_of_range("PolyMat::coeff");
    return coeffs_[static_cast<size_t>(i)];
}

std::optional<int> PolyMat::degree() const {
    for (int i = grade(); i >= 0; --i)
        if (!coeffs_[i].is_zero()) return i;
    return std::nullopt;
}

SPoly PolyMat::entry(int i, int j) const {
    std::vector<Rat> c(static_cast<size_t>(grade()) + 1);
    for (int t = 0; t <= grade(); ++t) c[t] = coeffs_[t].at(i, j);
    return SPoly(std::move(c));
}

void PolyMat::set_entry(int i, int j, const SPoly& p) {
    auto d = p.degree();
    if (d && *d > grade()) throw std::invalid_argument("PolyMat::set_entry: degree above grade");
    for (int t = 0; t <= grade(); ++t) coeffs_[t].at(i, j) = p.coeff(t);
}

std::optional<int> PolyMat::col_degree(int j) const {
    for (int t = grade(); t >= 0; --t)
        for (int i = 0; i < rows_; ++i)
            if (!coeffs_[t].at(i, j).is_zero()) return t;
    return std::nullopt;
}

PolyMat PolyMat::column(int j) const { return columns({j}); }

PolyMat PolyMat::columns(const std::vector<int>& idx) const {
    PolyMat r(rows_, static_cast<int>(idx.size()), grade());
    for (int t = 0; t <= grade(); ++t)
        for (size_t jj = 0; jj < idx.size(); ++jj)
            for (int i = 0; i < rows_; ++i)
                r.coeffs_[t].at(i, static_cast<int>(jj)) = coeffs_[t].at(i, idx[jj]);
    return r;
}

PolyMat PolyMat::with_grade(int g) const {
    auto d = degree();
    if (d && g < *d) throw std::invalid_argument("PolyMat::with_grade: grade below degree");
    PolyMat r(rows_, cols_, g);
    for (int t = 0; t <= std::min(g, grade()); ++t) r.coeffs_[t] = coeffs_[t];
    return r;
}

PolyMat PolyMat::transpose() const {
    PolyMat r(cols_, rows_, grade());
    for (int t = 0; t <= grade(); ++t) r.coeffs_[t] = coeffs_[t].transpose();
    return r;
}

PolyMat PolyMat::operator-() const {
    PolyMat r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyMat operator+(const PolyMat& a, const PolyMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("PolyMat: dimension mismatch in +");
    int g = std::max(a.grade(), b.grade());
    PolyMat r(a.rows_, a.cols_, g);
    for (int t = 0; t <= g; ++t) {
        if (t <= a.grade()) r.coeffs_[t] = r.coeffs_[t] + a.coeffs_[t];
        if (t <= b.grade()) r.coeffs_[t] = r.coeffs_[t] + b.coeffs_[t];
    }
    return r;
}

PolyMat operator-(const PolyMat& a, const PolyMat& b) { return a + (-b); }

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMat: dimension mismatch in *");
    PolyMat r(a.rows_, b.cols_, a.grade() + b.grade());
    for (int i = 0; i <= a.grade(); ++i)
        for (int j = 0; j <= b.grade(); ++j)
            r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return r;
}

PolyMat operator*(const SPoly& s, const PolyMat& a) {
    PolyMat r(a.rows_, a.cols_, s.grade() + a.grade());
    for (int i = 0; i <= s.grade(); ++i) {
        if (s.coeff(i).is_zero()) continue;
        for (int j = 0; j <= a.grade(); ++j)
            r.coeffs_[i + j] = r.coeffs_[i + j] + s.coeff(i) * a.coeffs_[j];
    }
    return r;
}

PolyMat operator*(const RatMat& c, const PolyMat& a) {
    PolyMat r(c.rows(), a.cols_, a.grade());
    for (int t = 0; t <= a.grade(); ++t) r.coeffs_[t] = c * a.coeffs_[t];
    return r;
}

PolyMat operator*(const PolyMat& a, const RatMat& c) {
    PolyMat r(a.rows_, c.cols(), a.grade());
    for (int t = 0; t <= a.grade(); ++t) r.coeffs_[t] = a.coeffs_[t] * c;
    return r;
}

bool operator==(const PolyMat& a, const PolyMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    int g = std::max(a.grade(), b.grade());
    RatMat zero(a.rows_, a.cols_);
    for (int t = 0; t <= g; ++t) {
        const RatMat& ca = t <= a.grade() ? a.coeffs_[t] : zero;
        const RatMat& cb = t <= b.grade() ? b.coeffs_[t] : zero;
        if (ca != cb) return false;
    }
    return true;
}

RatMat PolyMat::eval(const Rat& z) const {
    RatMat r = coeffs_[static_cast<size_t>(grade())];
    for (int t = grade() - 1; t >= 0; --t) r = z * r + coeffs_[t];
    return r;
}

PolyMat PolyMat::derivative(int order, bool normalized) const {
    if (order < 0) throw std::invalid_argument("PolyMat::derivative: negative order");
    PolyMat r = *this;
    for (int o = 0; o < order; ++o) {
        int g = std::max(r.grade() - 1, 0);
        PolyMat d(rows_, cols_, g);
        for (int t = 1; t <= r.grade(); ++t)
            d.coeffs_[t - 1] = Rat(t) * r.coeffs_[t];
        r = d;
    }
    if (normalized && order > 1) {
        Rat f = factorial(order).inv();
        for (auto& c : r.coeffs_) c = f * c;
    }
    return r;
}

PolyMat PolyMat::reversal(int wrt_grade) const {
    auto d = degree();
    if (d && wrt_grade < *d)
        throw std::invalid_argument("PolyMat::reversal: grade below degree");
    PolyMat r(rows_, cols_, wrt_grade);
    for (int t = 0; t <= wrt_grade; ++t)
        if (t <= grade()) r.coeffs_[wrt_grade - t] = coeffs_[t];
    return r;
}

PolyMat PolyMat::kron(const PolyMat& a, const PolyMat& b) {
    PolyMat r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.grade() + b.grade());
    for (int i = 0; i <= a.grade(); ++i)
        for (int j = 0; j <= b.grade(); ++j)
            r.coeffs_[i + j] = r.coeffs_[i + j] + RatMat::kron(a.coeffs_[i], b.coeffs_[j]);
    return r;
}

PolyMat PolyMat::hstack(const PolyMat& a, const PolyMat& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("PolyMat::hstack: row mismatch");
    int g = std::max(a.grade(), b.grade());
    PolyMat r(a.rows_, a.cols_ + b.cols_, g);
    for (int t = 0; t <= g; ++t) {
        if (t <= a.grade()) r.coeffs_[t].set_block(0, 0, a.coeffs_[t]);
        if (t <= b.grade()) r.coeffs_[t].set_block(0, a.cols_, b.coeffs_[t]);
    }
    return r;
}

PolyMat PolyMat::vstack(const PolyMat& a, const PolyMat& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("PolyMat::vstack: col mismatch");
    int g = std::max(a.grade(), b.grade());
    PolyMat r(a.rows_ + b.rows_, a.cols_, g);
    for (int t = 0; t <= g; ++t) {
        if (t <= a.grade()) r.coeffs_[t].set_block(0, 0, a.coeffs_[t]);
        if (t <= b.grade()) r.coeffs_[t].set_block(a.rows_, 0, b.coeffs_[t]);
    }
    return r;
}

int PolyMat::normal_rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    int bound = grade() * std::min(rows_, cols_);
    int best = 0;
    long probe = 0;
    for (int t = 0; t <= bound; ++t) {
        best = std::max(best, eval(Rat(probe)).rank());
        probe = probe > 0 ? -probe : -probe + 1;  // 0, 1, -1, 2, -2, ...
    }
    return best;
}

RatMat PolyMat::high_order_coefficient() const {
    RatMat h(rows_, cols_);
    for (int j = 0; j < cols_; ++j) {
        auto d = col_degree(j);
        if (!d) throw std::domain_error("high_order_coefficient: zero column");
        for (int i = 0; i < rows_; ++i) h.at(i, j) = coeffs_[static_cast<size_t>(*d)].at(i, j);
    }
    return h;
}

// ---------------------------------------------------------------------------

BivariateMat::BivariateMat(int rows, int cols, int grade_x, int grade_y)
    : rows_(rows), cols_(cols), grade_x_(grade_x), grade_y_(grade_y) {
    if (rows < 0 || cols < 0 || grade_x < 0 || grade_y < 0)
        throw std::invalid_argument("BivariateMat: bad dimensions");
    coeffs_.assign(static_cast<size_t>(grade_x + 1) * (grade_y + 1), RatMat(rows, cols));
}

RatMat& BivariateMat::coeff(int ypow, int xpow) {
    if (ypow < 0 || ypow > grade_y_ || xpow < 0 || xpow > grade_x_)
        throw std::out_of_range("BivariateMat::coeff");
    return coeffs_[static_cast<size_t>(ypow) * (grade_x_ + 1) + xpow];
}

const RatMat& BivariateMat::coeff(int ypow, int xpow) const {
    return const_cast<BivariateMat*>(this)->coeff(ypow, xpow);
}

BivariateMat BivariateMat::in_x(const PolyMat& p) {
    BivariateMat b(p.rows(), p.cols(), p.grade(), 0);
    for (int t = 0; t <= p.grade(); ++t) b.coeff(0, t) = p.coeff(t);
    return b;
}

BivariateMat BivariateMat::in_y(const PolyMat& p) {
    BivariateMat b(p.rows(), p.cols(), 0, p.grade());
    for (int t = 0; t <= p.grade(); ++t) b.coeff(t, 0) = p.coeff(t);
    return b;
}

BivariateMat operator+(const BivariateMat& a, const BivariateMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("BivariateMat: dimension mismatch");
    BivariateMat r(a.rows_, a.cols_, std::max(a.grade_x_, b.grade_x_),
                   std::max(a.grade_y_, b.grade_y_));
    for (int y = 0; y <= r.grade_y_; ++y)
        for (int x = 0; x <= r.grade_x_; ++x) {
            if (y <= a.grade_y_ && x <= a.grade_x_) r.coeff(y, x) = r.coeff(y, x) + a.coeff(y, x);
            if (y <= b.grade_y_ && x <= b.grade_x_) r.coeff(y, x) = r.coeff(y, x) + b.coeff(y, x);
        }
    return r;
}

BivariateMat operator-(const BivariateMat& a, const BivariateMat& b) {
    BivariateMat nb = b;
    for (auto& c : nb.coeffs_) c = -c;
    return a + nb;
}

bool operator==(const BivariateMat& a, const BivariateMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    int gx = std::max(a.grade_x_, b.grade_x_), gy = std::max(a.grade_y_, b.grade_y_);
    RatMat zero(a.rows_, a.cols_);
    for (int y = 0; y <= gy; ++y)
        for (int x = 0; x <= gx; ++x) {
            const RatMat& ca = (y <= a.grade_y_ && x <= a.grade_x_) ? a.coeff(y, x) : zero;
            const RatMat& cb = (y <= b.grade_y_ && x <= b.grade_x_) ? b.coeff(y, x) : zero;
            if (ca != cb) return false;
        }
    return true;
}

BivariateMat BivariateMat::mul_x(const SPoly& s) const {
    BivariateMat r(rows_, cols_, grade_x_ + s.grade(), grade_y_);
    for (int t = 0; t <= s.grade(); ++t) {
        if (s.coeff(t).is_zero()) continue;
        for (int y = 0; y <= grade_y_; ++y)
            for (int x = 0; x <= grade_x_; ++x)
                r.coeff(y, x + t) = r.coeff(y, x + t) + s.coeff(t) * coeff(y, x);
    }
    return r;
}

BivariateMat BivariateMat::mul_y(const SPoly& s) const {
    BivariateMat r(rows_, cols_, grade_x_, grade_y_ + s.grade());
    for (int t = 0; t <= s.grade(); ++t) {
        if (s.coeff(t).is_zero()) continue;
        for (int y = 0; y <= grade_y_; ++y)
            for (int x = 0; x <= grade_x_; ++x)
                r.coeff(y + t, x) = r.coeff(y + t, x) + s.coeff(t) * coeff(y, x);
    }
    return r;
}

BivariateMat BivariateMat::div_x_minus_y() const {
    // Treat as a polynomial in x with coefficients in F[y]^{m x n}; divide by
    // (x - y) by synthetic division from the top x-power down.
    if (grade_x_ == 0) throw std::domain_error("div_x_minus_y: x-grade is zero");
    BivariateMat q(rows_, cols_, grade_x_ - 1, grade_y_ + grade_x_ - 1);
    // rem accumulates the evaluation at x = y (substituting x -> y).
    BivariateMat rem(rows_, cols_, 0, grade_y_ + grade_x_);
    // Work down: q_{x-1} = c_x, then c_{x-1} += y * q_{x-1}, iteratively.
    // carry[y] holds the running coefficient (poly in y) at the current x power.
    std::vector<RatMat> carry(static_cast<size_t>(grade_y_ + grade_x_) + 1,
                              RatMat(rows_, cols_));
    for (int x = grade_x_; x >= 1; --x) {
        for (int y = 0; y <= grade_y_; ++y)
            carry[y] = carry[y] + coeff(y, x);
        for (int y = 0; y <= grade_y_ + grade_x_ - 1; ++y)
            q.coeff(y, x - 1) = carry[y];
        // multiply carry by y (shift up)
        for (int y = grade_y_ + grade_x_; y >= 1; --y) carry[y] = carry[y - 1];
        carry[0] = RatMat(rows_, cols_);
    }
    for (int y = 0; y <= grade_y_; ++y) carry[y] = carry[y] + coeff(y, 0);
    for (const auto& c : carry)
        if (!c.is_zero())
            throw std::domain_error("div_x_minus_y: nonzero remainder");
    return q;
}

BivariateMat BivariateMat::swap_transpose() const {
    BivariateMat r(cols_, rows_, grade_y_, grade_x_);
    for (int y = 0; y <= grade_y_; ++y)
        for (int x = 0; x <= grade_x_; ++x)
            r.coeff(x, y) = coeff(y, x).transpose();
    return r;
}

bool BivariateMat::is_symmetric_in_xy() const {
    int g = std::max(grade_x_, grade_y_);
    RatMat zero(rows_, cols_);
    for (int y = 0; y <= g; ++y)
        for (int x = 0; x < y; ++x) {
            const RatMat& a = (y <= grade_y_ && x <= grade_x_) ? coeff(y, x) : zero;
            const RatMat& b = (x <= grade_y_ && y <= grade_x_) ? coeff(x, y) : zero;
            if (a != b) return false;
        }
    return true;
}

BivariateMat BivariateMat::derivative_x(int order, bool normalized) const {
    BivariateMat r = *this;
    for (int o = 0; o < order; ++o) {
        BivariateMat d(rows_, cols_, std::max(r.grade_x_ - 1, 0), r.grade_y_);
        for (int y = 0; y <= r.grade_y_; ++y)
            for (int x = 1; x <= r.grade_x_; ++x)
                d.coeff(y, x - 1) = Rat(x) * r.coeff(y, x);
        r = d;
    }
    if (normalized && order > 1) {
        Rat f = factorial(order).inv();
        for (auto& c : r.coeffs_) c = f * c;
    }
    return r;
}

BivariateMat BivariateMat::derivative_y(int order, bool normalized) const {
    BivariateMat r = *this;
    for (int o = 0; o < order; ++o) {
        BivariateMat d(rows_, cols_, r.grade_x_, std::max(r.grade_y_ - 1, 0));
        for (int y = 1; y <= r.grade_y_; ++y)
            for (int x = 0; x <= r.grade_x_; ++x)
                d.coeff(y - 1, x) = Rat(y) * r.coeff(y, x);
        r = d;
    }
    if (normalized && order > 1) {
        Rat f = factorial(order).inv();
        for (auto& c : r.coeffs_) c = f * c;
    }
    return r;
}

RatMat BivariateMat::eval(const Rat& x, const Rat& y) const {
    RatMat r(rows_, cols_);
    for (int yp = 0; yp <= grade_y_; ++yp)
        for (int xp = 0; xp <= grade_x_; ++xp)
            r = r + (y.pow(yp) * x.pow(xp)) * coeff(yp, xp);
    return r;
}

BivariateMat block_to_bivariate(const RatMat& B, int k) {
    if (k <= 0 || B.rows() % k != 0 || B.cols() % k != 0)
        throw std::invalid_argument("block_to_bivariate: dimensions not divisible by k");
    int m = B.rows() / k, n = B.cols() / k;
    BivariateMat f(m, n, k - 1, k - 1);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            f.coeff(k - i, k - j) = B.block((i - 1) * m, (j - 1) * n, m, n);
    return f;
}

RatMat bivariate_to_block(const BivariateMat& F) {
    int k = F.gradeX() + 1;
    if (F.gradeY() + 1 != k)
        throw std::invalid_argument("bivariate_to_block: grades differ");
    int m = F.rows(), n = F.cols();
    RatMat B(k * m, k * n);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            B.set_block((i - 1) * m, (j - 1) * n, F.coeff(k - i, k - j));
    return B;
}

BivariatePencil block_poly_to_bivariate(const PolyMat& L, int k) {
    BivariatePencil out;
    for (int t = 0; t <= L.grade(); ++t)
        out.z_coeffs.push_back(block_to_bivariate(L.coeff(t), k));
    return out;
}

PolyMat bivariate_to_block_poly(const BivariatePencil& F) {
    std::vector<RatMat> cs;
    for (const auto& b : F.z_coeffs) cs.push_back(bivariate_to_block(b));
    return PolyMat(std::move(cs));
}

}  // namespace dlp
