#ifndef DLP_POLYMAT_HPP
#define DLP_POLYMAT_HPP

#include <optional>
#include <vector>

#include "dlp/ratmat.hpp"
#include "dlp/spoly.hpp"

namespace dlp {

/// m x n matrix polynomial of explicit grade k, stored as k+1 coefficient
/// matrices indexed by power of z. The leading coefficient may be zero.
class PolyMat {
public:
    PolyMat() : rows_(0), cols_(0) {}
    PolyMat(int rows, int cols, int grade);
    explicit PolyMat(std::vector<RatMat> coeffs);  // grade = size-1

    static PolyMat from_constant(const RatMat& c, int grade = 0);
    static PolyMat from_scalar(const SPoly& p);  // 1x1
    /// Vandermonde vector V(z) = [z^{k-1}, ..., z, 1]^T, size k x 1, grade k-1.
    static PolyMat vandermonde_vector(int k);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int grade() const { return static_cast<int>(coeffs_.size()) - 1; }
    const RatMat& coeff(int i) const;
    RatMat& coeff(int i);
    const std::vector<RatMat>& coeffs() const { return coeffs_; }

    std::optional<int> degree() const;  // empty for the zero matrix
    bool is_zero() const { return !degree().has_value(); }

    SPoly entry(int i, int j) const;  // scalar polynomial at (i,j), grade = grade()
    void set_entry(int i, int j, const SPoly& p);  // requires deg p <= grade

    std::optional<int> col_degree(int j) const;  // empty for a zero column
    PolyMat column(int j) const;
    PolyMat columns(const std::vector<int>& idx) const;

    PolyMat with_grade(int g) const;  // requires g >= degree; trims or pads
    PolyMat transpose() const;

    PolyMat operator-() const;
    friend PolyMat operator+(const PolyMat& a, const PolyMat& b);
    friend PolyMat operator-(const PolyMat& a, const PolyMat& b);
    friend PolyMat operator*(const PolyMat& a, const PolyMat& b);  // grades add
    friend PolyMat operator*(const SPoly& s, const PolyMat& a);
    friend PolyMat operator*(const RatMat& c, const PolyMat& a);
    friend PolyMat operator*(const PolyMat& a, const RatMat& c);
    friend bool operator==(const PolyMat& a, const PolyMat& b);  // coefficient equality, grades may differ
    friend bool operator!=(const PolyMat& a, const PolyMat& b) { return !(a == b); }

    RatMat eval(const Rat& z) const;

    /// Entrywise derivative; grade drops by order (floored at 0).
    PolyMat derivative(int order = 1, bool normalized = false) const;

    /// Rev_k P(z) = z^k P(1/z) with k = wrt_grade >= degree.
    PolyMat reversal(int wrt_grade) const;

    static PolyMat kron(const PolyMat& a, const PolyMat& b);  // grades add

    static PolyMat hstack(const PolyMat& a, const PolyMat& b);
    static PolyMat vstack(const PolyMat& a, const PolyMat& b);

    /// Rank over F(z), probed deterministically at 0, 1, -1, 2, -2, ...
    /// (grade*min(m,n) + 1 points).
    int normal_rank() const;

    /// {A(z)}: per-column leading coefficient vectors. Throws on a zero column.
    RatMat high_order_coefficient() const;

private:
    int rows_, cols_;
    std::vector<RatMat> coeffs_;
};

/// m x n bivariate matrix polynomial, coefficient of y^i x^j at (i, j).
class BivariateMat {
public:
    BivariateMat(int rows, int cols, int grade_x, int grade_y);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int gradeX() const { return grade_x_; }
    int gradeY() const { return grade_y_; }

    RatMat& coeff(int ypow, int xpow);
    const RatMat& coeff(int ypow, int xpow) const;

    /// Lift a univariate matrix polynomial into the x (or y) variable.
    static BivariateMat in_x(const PolyMat& p);
    static BivariateMat in_y(const PolyMat& p);

    friend BivariateMat operator+(const BivariateMat& a, const BivariateMat& b);
    friend BivariateMat operator-(const BivariateMat& a, const BivariateMat& b);
    friend bool operator==(const BivariateMat& a, const BivariateMat& b);
    friend bool operator!=(const BivariateMat& a, const BivariateMat& b) { return !(a == b); }

    BivariateMat mul_x(const SPoly& s) const;  // multiply by s(x)
    BivariateMat mul_y(const SPoly& s) const;  // multiply by s(y)

    /// Exact division by (x - y); throws if the remainder is nonzero.
    BivariateMat div_x_minus_y() const;

    /// F(x,y) -> F(y,x) with transposed blocks (n x m result).
    BivariateMat swap_transpose() const;

    bool is_symmetric_in_xy() const;  // F(x,y) == F(y,x) entrywise (square coefficients not required)

    /// Partial derivative, normalized = divide by order!.
    BivariateMat derivative_x(int order, bool normalized) const;
    BivariateMat derivative_y(int order, bool normalized) const;
    RatMat eval(const Rat& x, const Rat& y) const;

private:
    int rows_, cols_, grade_x_, grade_y_;
    std::vector<RatMat> coeffs_;  // index = ypow * (grade_x_+1) + xpow
};

/// Block matrix (k x k blocks of size m x n) <-> bivariate polynomial of
/// grade k-1 in both variables: block (i,j) (1-based) = coeff of y^{k-i} x^{k-j}.
BivariateMat block_to_bivariate(const RatMat& B, int k);
RatMat bivariate_to_block(const BivariateMat& F);

/// Same bijection applied blockwise to a pencil/grade-g block polynomial:
/// the result is a PolyMat in z whose coefficient t is bivariate-mapped.
struct BivariatePencil {
    std::vector<BivariateMat> z_coeffs;  // index = power of z
};
BivariatePencil block_poly_to_bivariate(const PolyMat& L, int k);
PolyMat bivariate_to_block_poly(const BivariatePencil& F);

}  // namespace dlp

#endif
