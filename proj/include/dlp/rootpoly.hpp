#ifndef DLP_ROOTPOLY_HPP
#define DLP_ROOTPOLY_HPP

#include <vector>

#include "dlp/dlpencil.hpp"
#include "dlp/eigenstructure.hpp"
#include "dlp/polymat.hpp"

namespace dlp {

/// Root polynomial r at lambda of order l: P r = (z-lambda)^l w with
/// w(lambda) != 0 and r(lambda) outside span M(lambda).
struct RootPoly {
    PolyMat vec;  // n x 1
    Rat lambda;
    int order = 0;
};

struct RootPolySet {
    std::vector<RootPoly> members;  // common lambda, orders non-increasing
    bool lambda_independent = false;
    bool complete = false;
    bool maximal = false;
};

enum class RootPolyStatus {
    kValid,            // order >= 1, both conditions hold
    kNotVanishing,     // P r(lambda) != 0 (order 0)
    kInKernelSpan,     // r(lambda) in span M(lambda)
    kIdenticallyZero,  // P r == 0, no finite order
};

struct RootPolyCheck {
    RootPolyStatus status = RootPolyStatus::kNotVanishing;
    int order = 0;  // meaningful only when kValid
    bool ok() const { return status == RootPolyStatus::kValid; }
};

/// Verify both defining conditions exactly; M must be a right minimal basis of P.
RootPolyCheck check_root_poly(const PolyMat& P, const MinimalBasis& M, const PolyMat& r,
                              const Rat& lambda);

/// Compute the lambda-independent / complete / maximal flags for a set of
/// valid root polynomials at a common lambda. Maximality is decided through
/// the order-sum criterion against the partial multiplicities.
RootPolySet classify_set(const PolyMat& P, const MinimalBasis& M,
                         const std::vector<RootPoly>& members);

/// Greedy deterministic maximal set at an eigenvalue lambda; output orders
/// equal the partial multiplicities of P at lambda (non-increasing).
RootPolySet maximal_set(const PolyMat& P, const Rat& lambda);

/// rho_i = V(z) (x) r_i(z); asserted to be root polynomials for L = DL(P,v)
/// of identical orders, with set flags recomputed against L.
RootPolySet lift_root_polys(const RootPolySet& set, const PolyMat& P, const Ansatz& v);

}  // namespace dlp

#endif
