#ifndef DLP_RECOVERY_HPP
#define DLP_RECOVERY_HPP

#include <vector>

#include "dlp/dlpencil.hpp"
#include "dlp/eigenstructure.hpp"
#include "dlp/rootpoly.hpp"

namespace dlp {

/// Left multiplication by omega^T (x) I_n, mapping kn-row objects to n-row ones.
struct OmegaMap {
    std::vector<Rat> omega;
    int n = 0;

    OmegaMap() = default;
    OmegaMap(std::vector<Rat> omega_, int n_) : omega(std::move(omega_)), n(n_) {}
    static OmegaMap from_pencil(const DLPencil& LP) { return {LP.ansatz.omega, LP.n}; }

    int k() const { return static_cast<int>(omega.size()); }
    RatMat matrix() const;  // n x kn
    RatMat apply(const RatMat& x) const;
    PolyMat apply(const PolyMat& x) const;
};

/// Minimal basis of P from a minimal basis N of L = DL(P,v): apply Omega,
/// keep the nonconstant columns, and complete with the exact Gaussian pivot
/// columns of the constant block. Verified against the Forney criterion and
/// P * result == 0; failure signals an exclusion violation or corrupted input.
MinimalBasis recover_minimal_basis(const MinimalBasis& N, const OmegaMap& omega,
                                   const PolyMat& P);

/// The matrix C with span C = ker Omega restricted to ker L(z); asserts
/// Omega C = 0, full column rank and dimension (k-1)p.
RatMat kernel_of_omega(const DLPencil& LP, const PolyMat& P, const MinimalBasis& M);

/// (omega^T (x) I_n) u for u in ker L(lambda), guaranteed to lie in
/// ker P(lambda). Requires v(lambda) != 0.
RatMat recover_eigenvector(const DLPencil& LP, const PolyMat& P, const Rat& lambda,
                           const RatMat& u);

/// r_i = Omega(rho_i) for a set of root polynomials of L at lambda; flags are
/// recomputed against P, so a maximal input yields a maximal output.
RootPolySet recover_root_polys(const RootPolySet& set, const OmegaMap& omega,
                               const PolyMat& P);

}  // namespace dlp

#endif
