#include "dlp/recovery.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlp {

RatMat OmegaMap::matrix() const {
    RatMat row(1, k());
    for (int i = 0; i < k(); ++i) row.at(0, i) = omega[static_cast<size_t>(i)];
    return RatMat::kron(row, RatMat::identity(n));
}

RatMat OmegaMap::apply(const RatMat& x) const { return matrix() * x; }

PolyMat OmegaMap::apply(const PolyMat& x) const { return matrix() * x; }

MinimalBasis recover_minimal_basis(const MinimalBasis& N, const OmegaMap& omega,
                                   const PolyMat& P) {
    PolyMat Mhat = omega.apply(N.basis);
    std::vector<int> nonconstant, constant;
    for (int j = 0; j < Mhat.cols(); ++j) {
        if (Mhat.col_degree(j).value_or(0) >= 1)
            nonconstant.push_back(j);
        else
            constant.push_back(j);  // zero columns land here too
    }
    PolyMat Md = Mhat.columns(nonconstant);
    RatMat Mc(P.cols(), static_cast<int>(constant.size()));
    for (size_t c = 0; c < constant.size(); ++c)
        Mc.set_block(0, static_cast<int>(c), Mhat.coeff(0).col(constant[c]));

    PolyMat out_basis = Md;
    if (!Mc.is_zero()) {
        std::vector<int> pivots;
        Mc.rref(&pivots);
        RatMat Mb(Mc.rows(), static_cast<int>(pivots.size()));
        for (size_t c = 0; c < pivots.size(); ++c)
            Mb.set_block(0, static_cast<int>(c), Mc.col(pivots[c]));
        out_basis = PolyMat::hstack(PolyMat::from_constant(Mb), Md);
    }

    // Columns sorted by degree, ascending.
    std::vector<int> order(static_cast<size_t>(out_basis.cols()));
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return out_basis.col_degree(x).value_or(0) < out_basis.col_degree(y).value_or(0);
    });
    MinimalBasis out;
    out.basis = out_basis.columns(order);
    for (int j = 0; j < out.basis.cols(); ++j)
        out.indices.push_back(out.basis.col_degree(j).value_or(0));

    if (!(P * out.basis).is_zero())
        throw std::domain_error("recover_minimal_basis: result not in ker P");
    if (out.basis.cols() > 0 && !is_minimal_basis(out.basis).ok)
        throw std::domain_error(
            "recover_minimal_basis: Forney check failed (exclusion violation or corrupted input)");
    return out;
}

RatMat kernel_of_omega(const DLPencil& LP, const PolyMat& P, const MinimalBasis& M) {
    StructuredBasis sb = structured_minimal_basis(LP, P, M);
    OmegaMap omega = OmegaMap::from_pencil(LP);
    int k = LP.k, p = M.basis.cols();
    if (!omega.apply(sb.C).is_zero())
        throw std::logic_error("kernel_of_omega: Omega C != 0");
    if (sb.C.cols() != (k - 1) * p || sb.C.rank() != (k - 1) * p)
        throw std::logic_error("kernel_of_omega: C does not have full column rank (k-1)p");
    return sb.C;
}

RatMat recover_eigenvector(const DLPencil& LP, const PolyMat& P, const Rat& lambda,
                           const RatMat& u) {
    if (LP.ansatz.v.eval(lambda).is_zero())
        throw std::invalid_argument("recover_eigenvector: v(lambda) = 0");
    if (u.rows() != LP.k * LP.n || u.cols() != 1)
        throw std::invalid_argument("recover_eigenvector: wrong vector size");
    if (!(LP.L.eval(lambda) * u).is_zero())
        throw std::invalid_argument("recover_eigenvector: u is not in ker L(lambda)");
    RatMat h = OmegaMap::from_pencil(LP).apply(u);
    if (!(P.eval(lambda) * h).is_zero())
        throw std::logic_error("recover_eigenvector: image not in ker P(lambda)");
    return h;
}

RootPolySet recover_root_polys(const RootPolySet& set, const OmegaMap& omega,
                               const PolyMat& P) {
    MinimalBasis M = minimal_basis(P);
    std::vector<RootPoly> rec;
    for (const auto& rho : set.members) {
        RootPoly r;
        r.vec = omega.apply(rho.vec);
        r.lambda = rho.lambda;
        RootPolyCheck chk = check_root_poly(P, M, r.vec, r.lambda);
        if (!chk.ok())
            throw std::domain_error("recover_root_polys: image is not a root polynomial of P");
        r.order = chk.order;
        rec.push_back(std::move(r));
    }
    return classify_set(P, M, rec);
}

}  // namespace dlp
