#include "dlp/rootpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dlp {

namespace {

/// Largest l with (z-lambda)^l dividing every entry of the (nonzero) column q.
int column_root_multiplicity(const PolyMat& q, const Rat& lambda) {
    int best = -1;
    for (int i = 0; i < q.rows(); ++i) {
        SPoly e = q.entry(i, 0);
        if (e.is_zero()) continue;
        int mult = e.root_multiplicity(lambda);
        if (best < 0 || mult < best) best = mult;
    }
    return best;  // -1 for the zero column
}

RatMat members_at_lambda(const std::vector<RootPoly>& members, const Rat& lambda, int n) {
    RatMat R(n, static_cast<int>(members.size()));
    for (size_t j = 0; j < members.size(); ++j)
        R.set_block(0, static_cast<int>(j), members[j].vec.eval(lambda));
    return R;
}

}  // namespace

RootPolyCheck check_root_poly(const PolyMat& P, const MinimalBasis& M, const PolyMat& r,
                              const Rat& lambda) {
    if (r.cols() != 1 || r.rows() != P.cols())
        throw std::invalid_argument("check_root_poly: r must be an n x 1 vector");
    RootPolyCheck out;
    PolyMat q = P * r;
    int order = column_root_multiplicity(q, lambda);
    if (order < 0) {
        out.status = RootPolyStatus::kIdenticallyZero;
        return out;
    }
    if (order == 0) {
        out.status = RootPolyStatus::kNotVanishing;
        return out;
    }
    RatMat Ml = M.basis.eval(lambda);
    RatMat cand = RatMat::hstack(Ml, r.eval(lambda));
    if (cand.rank() != Ml.cols() + 1) {
        out.status = RootPolyStatus::kInKernelSpan;
        return out;
    }
    out.status = RootPolyStatus::kValid;
    out.order = order;
    return out;
}

RootPolySet classify_set(const PolyMat& P, const MinimalBasis& M,
                         const std::vector<RootPoly>& members) {
    RootPolySet out;
    out.members = members;
    std::stable_sort(out.members.begin(), out.members.end(),
                     [](const RootPoly& x, const RootPoly& y) { return x.order > y.order; });
    if (out.members.empty()) {
        // Vacuously complete iff there is nothing to find: t = 0.
        out.lambda_independent = true;
        out.complete = true;   // caller supplies lambda only through members; see below
        out.maximal = true;
        return out;
    }
    const Rat& lambda = out.members.front().lambda;
    for (const auto& rp : out.members)
        if (rp.lambda != lambda) throw std::invalid_argument("classify_set: mixed eigenvalues");

    int n = P.cols(), p = M.basis.cols();
    int t = static_cast<int>(out.members.size());
    RatMat Ml = M.basis.eval(lambda);
    RatMat R = members_at_lambda(out.members, lambda, n);
    out.lambda_independent = RatMat::hstack(Ml, R).rank() == p + t;
    int target = (n - P.eval(lambda).rank()) - p;  // dim ker P(lambda) - dim ker_lambda P(z)
    out.complete = out.lambda_independent && t == target;

    auto mults = partial_multiplicities_at(P, lambda);
    int total = std::accumulate(mults.begin(), mults.end(), 0);
    int sum = 0;
    for (const auto& rp : out.members) sum += rp.order;
    out.maximal = out.complete && sum == total;
    return out;
}

RootPolySet maximal_set(const PolyMat& P, const Rat& lambda) {
    std::vector<int> targets = partial_multiplicities_at(P, lambda);  // ascending
    if (targets.empty()) throw std::invalid_argument("maximal_set: lambda is not an eigenvalue");
    std::reverse(targets.begin(), targets.end());
    MinimalBasis M = minimal_basis(P);

    int m = P.rows(), n = P.cols();
    // (z - lambda)-adic coefficients of P: P_s = P^(s)(lambda)/s!.
    int lmax = targets.front();
    std::vector<RatMat> Padic;
    for (int s = 0; s < lmax; ++s)
        Padic.push_back(P.derivative(s, /*normalized=*/true).eval(lambda));

    RatMat span = M.basis.eval(lambda);  // columns to stay independent from
    std::vector<RootPoly> members;
    for (int ell : targets) {
        // Solve sum_{j+s=t} P_s r_j = 0 for t = 0..ell-1, unknowns r_0..r_{ell-1}.
        RatMat T(ell * m, ell * n);
        for (int t = 0; t < ell; ++t)
            for (int j = 0; j <= t; ++j) T.set_block(t * m, j * n, Padic[static_cast<size_t>(t - j)]);
        RatMat N = T.nullspace();
        // The value map x -> r_0 is linear, so if any solution has r(lambda)
        // outside the current span, some basis column does.
        int found = -1;
        for (int cidx = 0; cidx < N.cols() && found < 0; ++cidx) {
            RatMat r0 = N.block(0, cidx, n, 1);
            if (RatMat::hstack(span, r0).rank() == span.cols() + 1) found = cidx;
        }
        if (found < 0) throw std::logic_error("maximal_set: no admissible solution found");
        RatMat x = N.col(found);
        // Reassemble r(z) = sum_j r_j (z - lambda)^j.
        PolyMat r(n, 1, ell - 1);
        SPoly shift = SPoly::linear_root(lambda);
        for (int i = 0; i < n; ++i) {
            SPoly e = SPoly::zero();
            for (int j = ell - 1; j >= 0; --j)
                e = e * shift + SPoly::constant(x.at(j * n + i, 0));
            r.set_entry(i, 0, e);
        }
        RootPolyCheck chk = check_root_poly(P, M, r, lambda);
        if (!chk.ok() || chk.order < ell)
            throw std::logic_error("maximal_set: constructed vector fails validation");
        span = RatMat::hstack(span, r.eval(lambda));
        members.push_back({std::move(r), lambda, chk.order});
    }
    RootPolySet out = classify_set(P, M, members);
    if (!out.maximal) throw std::logic_error("maximal_set: order-sum certificate failed");
    return out;
}

RootPolySet lift_root_polys(const RootPolySet& set, const PolyMat& P, const Ansatz& v) {
    if (!exclusion_holds(P, v))
        throw std::domain_error("lift_root_polys: eigenvalue exclusion fails");
    DLPencil LP = build_dl(P, v);
    PolyMat V = PolyMat::vandermonde_vector(LP.k);
    std::vector<RootPoly> lifted;
    for (const auto& rp : set.members)
        lifted.push_back({PolyMat::kron(V, rp.vec), rp.lambda, rp.order});
    if (lifted.empty()) {
        RootPolySet out;
        out.lambda_independent = out.complete = out.maximal = true;
        return out;
    }
    MinimalBasis ML = minimal_basis(LP.L);
    for (size_t i = 0; i < lifted.size(); ++i) {
        RootPolyCheck chk = check_root_poly(LP.L, ML, lifted[i].vec, lifted[i].lambda);
        if (!chk.ok() || chk.order != set.members[i].order)
            throw std::logic_error("lift_root_polys: lifted vector is not a root polynomial of the same order");
        lifted[i].order = chk.order;
    }
    return classify_set(LP.L, ML, lifted);
}

}  // namespace dlp
