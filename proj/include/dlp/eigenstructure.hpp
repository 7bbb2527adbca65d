#ifndef DLP_EIGENSTRUCTURE_HPP
#define DLP_EIGENSTRUCTURE_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "dlp/polymat.hpp"

namespace dlp {

struct IndexSumViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact Smith canonical form: U P V = diag(d_1,...,d_r, 0,...,0) with U, V
/// unimodular and d_i | d_{i+1}, each d_i monic.
struct SmithForm {
    PolyMat U, V;
    std::vector<SPoly> invariant_factors;
    int rank = 0;
};

SmithForm smith_form(const PolyMat& P);

/// Determinant of a square matrix polynomial, computed by evaluation at
/// grade*n + 1 probe points and Lagrange interpolation.
SPoly poly_det(const PolyMat& P);

struct MinimalBasis {
    PolyMat basis;             // n x p, columns sorted by degree ascending
    std::vector<int> indices;  // column degrees, ascending
};

struct MinimalBasisDiagnostics {
    bool ok = false;
    bool full_rank_everywhere = false;  // Forney condition 1
    bool high_order_full_rank = false;  // Forney condition 2
};

/// Forney criterion. Condition 1 is checked exactly through the invariant
/// factors (all constant and rank p); condition 2 through the rank of the
/// high order coefficient matrix.
MinimalBasisDiagnostics is_minimal_basis(const PolyMat& A);

/// Right minimal basis via the degree sweep over block-Toeplitz nullspaces.
/// Deterministic; verifies the Forney criterion before returning.
MinimalBasis minimal_basis(const PolyMat& P);

/// Exponents of (z - lambda) in the invariant factors, positive only, ascending.
std::vector<int> partial_multiplicities_at(const PolyMat& P, const Rat& lambda);

/// Partial multiplicities of 0 for Rev_k P with k = grade.
std::vector<int> infinite_multiplicities(const PolyMat& P);

struct Eigenstructure {
    std::map<Rat, std::vector<int>> finite_eigs;  // lambda -> ascending multiplicities
    std::vector<int> inf_mults;                   // ascending
    std::vector<int> right_minimal_indices;       // ascending
    std::vector<int> left_minimal_indices;        // ascending
    int rank = 0;
    int grade = 0;
    bool irrational_warning = false;  // d_r has non-rational roots; data partial

    int index_sum() const;
    bool operator==(const Eigenstructure& o) const;
};

/// Complete structural data. Finite eigenvalues are found as rational roots of
/// the last invariant factor plus any user-supplied candidates. Asserts the
/// index sum identity (k * rank) unless the irrational warning is set.
Eigenstructure full_eigenstructure(const PolyMat& P,
                                   const std::vector<Rat>& candidate_eigs = {});

}  // namespace dlp

#endif
