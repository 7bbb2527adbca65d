#ifndef DLP_RATMAT_HPP
#define DLP_RATMAT_HPP

#include <vector>

#include "dlp/rat.hpp"

namespace dlp {

/// Dense matrix of exact rationals. Row-major.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols, const Rat& fill = Rat(0));

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j);
    const Rat& at(int i, int j) const;

    bool is_zero() const;

    RatMat transpose() const;
    RatMat operator-() const;
    friend RatMat operator+(const RatMat& a, const RatMat& b);
    friend RatMat operator-(const RatMat& a, const RatMat& b);
    friend RatMat operator*(const RatMat& a, const RatMat& b);
    friend RatMat operator*(const Rat& c, const RatMat& a);
    friend bool operator==(const RatMat& a, const RatMat& b);
    friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }

    static RatMat kron(const RatMat& a, const RatMat& b);
    static RatMat hstack(const RatMat& a, const RatMat& b);
    static RatMat vstack(const RatMat& a, const RatMat& b);

    RatMat col(int j) const;
    RatMat submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
    void set_block(int i0, int j0, const RatMat& b);
    RatMat block(int i0, int j0, int r, int c) const;

    int rank() const;
    /// Reduced row echelon form; pivot column indices returned via pivots.
    RatMat rref(std::vector<int>* pivots = nullptr) const;
    /// Columns form a basis of the right nullspace (possibly 0 columns).
    RatMat nullspace() const;
    RatMat inverse() const;  // throws if singular
    Rat det() const;         // square only

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rat> data_;
};

}  // namespace dlp

#endif
