#ifndef DLP_MOBIUS_HPP
#define DLP_MOBIUS_HPP

#include <string>

#include "dlp/dlpencil.hpp"
#include "dlp/eigenstructure.hpp"
#include "dlp/polymat.hpp"

namespace dlp {

/// Mobius map r(z) = n(z)/d(z) with n(z) = a z + b, d(z) = c z + d, ad - bc != 0.
struct MobiusMap {
    Rat a, b, c, d;

    MobiusMap() : a(1), b(0), c(0), d(1) {}
    MobiusMap(Rat a_, Rat b_, Rat c_, Rat d_);

    static MobiusMap identity() { return MobiusMap(); }
    static MobiusMap reciprocal() { return MobiusMap(Rat(0), Rat(1), Rat(1), Rat(0)); }

    SPoly num() const;  // a z + b, grade 1
    SPoly den() const;  // c z + d, grade 1
    Rat det() const { return a * d - b * c; }
    MobiusMap inverse() const;
    MobiusMap compose(const MobiusMap& s) const;  // this o s

    /// Image of a finite point; empty when d(mu) = 0 (maps to infinity).
    std::optional<Rat> apply(const Rat& mu) const;
};

/// M_{g,r}(P)(z) = d(z)^g P(n(z)/d(z)), exact, grade g. Requires g >= degree P.
PolyMat mobius_transform(const PolyMat& P, int g, const MobiusMap& r);
SPoly mobius_scalar(const SPoly& p, int g, const MobiusMap& r);

/// Invertible B with B V(z) = [n^{k-1}, n^{k-2} d, ..., d^{k-1}]^T.
RatMat change_basis_B(const MobiusMap& r, int k);

/// Verifies (B^T ox I_m) M_{1,r}(L) (B ox I_n) = DL(M_{k,r}(P), M_{k-1,r}(v))
/// exactly; on failure, detail (if non-null) names the first differing block.
bool commuting_diagram_check(const PolyMat& P, const Ansatz& v, const MobiusMap& r,
                             std::string* detail = nullptr);

/// Eigenstructure of M_{g,r}(P) from that of P, assuming the image keeps
/// grade g: eigenvalues move by lambda d(mu) = n(mu); multiplicities and
/// minimal indices are untouched.
Eigenstructure transport_eigenstructure(const Eigenstructure& E, const MobiusMap& r);

/// A map r with r^{-1}(infinity) not in the spectrum of P (nor a root of v,
/// when given), so that M_{k,r}(P) and M_{k-1,r}(v) have no structure at
/// infinity. The finite point is probed from 0, 1, -1, 2, -2, ...
MobiusMap move_infinity_map(const PolyMat& P, const SPoly* v = nullptr);

}  // namespace dlp

#endif
