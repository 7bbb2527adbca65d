#ifndef DLP_DLPENCIL_HPP
#define DLP_DLPENCIL_HPP

#include <vector>

#include "dlp/eigenstructure.hpp"
#include "dlp/polymat.hpp"

namespace dlp {

/// Ansatz polynomial v of grade k-1 and the vector omega with v(x) = omega^T V(x).
struct Ansatz {
    SPoly v;                 // grade k-1
    std::vector<Rat> omega;  // length k, omega[0] multiplies z^{k-1}

    static Ansatz from_poly(const SPoly& v);
    static Ansatz from_omega(const std::vector<Rat>& omega);
    int k() const { return static_cast<int>(omega.size()); }
};

/// The pencil DL(P,v), size km x kn, grade 1.
struct DLPencil {
    PolyMat L;
    int k = 0;
    Ansatz ansatz;
    int m = 0, n = 0;  // size of the source polynomial
};

/// Construct DL(P,v) through the Bezoutian
/// [P(y)(x-z)v(x) - P(x)(y-z)v(y)] / (x-y), divided exactly by (x-y) and
/// mapped to block form. Asserts the contraction identities and x/y symmetry.
DLPencil build_dl(const PolyMat& P, const Ansatz& v);

/// True when the root sets of v (with infinity counted through grade-degree)
/// and the eigenvalues of P (including infinity) are disjoint. Requires the
/// non-constant rational-root-free part of v to be trivial, else throws.
bool exclusion_holds(const PolyMat& P, const Ansatz& v);

/// Normalized confluent Vandermonde matrix for w with the given rational
/// roots/multiplicities (sum of multiplicities = k = deg w).
RatMat confluent_vandermonde_W(const std::vector<std::pair<Rat, int>>& roots, int k);

struct BlockEvaluation {
    RatMat W;
    std::vector<RatMat> Q;         // diagonal blocks, sizes m*l_i x n*l_i
    std::vector<Rat> c;            // c_i = w^(l_i)(mu_i)/l_i!
    std::vector<Rat> nodes;        // mu_0, mu_1, ..., mu_s
    std::vector<int> mults;        // 1, l_1, ..., l_s
};

/// Congruence factorization (W^T ox I_m) L(mu0) (W ox I_n) = direct sum of
/// block-antitriangular Q_i with antidiagonal blocks c_i P(mu_i).
BlockEvaluation block_evaluation(const DLPencil& LP, const PolyMat& P, const Rat& mu0);

struct StructuredBasis {
    RatMat C;                  // kn x (k-1)p
    PolyMat D;                 // V(z) ox M(z)
    PolyMat E;                 // D - sum H_i C_i
    PolyMat F;                 // [C, E/v], kn x kp
    std::vector<SPoly> hermite;
};

/// The structured minimal basis F(z) of ker DL(P,v) built from a minimal
/// basis M of P. Requires the exclusion condition, v of full degree k-1 with
/// rational roots only.
StructuredBasis structured_minimal_basis(const DLPencil& LP, const PolyMat& P,
                                         const MinimalBasis& M);

/// Block-arrowhead pencil (W^T ox I_m) L(z) (W ox I_n) for v with simple roots
/// mu_1..mu_{k-1}, written around mu_0; asserts the explicit block formulas.
PolyMat arrowhead_pencil(const PolyMat& P, const std::vector<Rat>& mus, const Rat& mu0);

}  // namespace dlp

#endif
