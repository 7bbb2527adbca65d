#include "dlp/mobius.hpp"

#include <stdexcept>

namespace dlp {

MobiusMap::MobiusMap(Rat a_, Rat b_, Rat c_, Rat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (det().is_zero()) throw std::invalid_argument("MobiusMap: singular coefficient matrix");
}

SPoly MobiusMap::num() const { return SPoly({b, a}, 1); }
SPoly MobiusMap::den() const { return SPoly({d, c}, 1); }

MobiusMap MobiusMap::inverse() const { return MobiusMap(d, -b, -c, a); }

MobiusMap MobiusMap::compose(const MobiusMap& s) const {
    // (this o s): first s, then this, matching 2x2 matrix multiplication.
    return MobiusMap(a * s.a + b * s.c, a * s.b + b * s.d,
                     c * s.a + d * s.c, c * s.b + d * s.d);
}

std::optional<Rat> MobiusMap::apply(const Rat& mu) const {
    Rat dm = c * mu + d;
    if (dm.is_zero()) return std::nullopt;
    return (a * mu + b) / dm;
}

PolyMat mobius_transform(const PolyMat& P, int g, const MobiusMap& r) {
    int deg = P.degree().value_or(0);
    if (g < deg) throw std::invalid_argument("mobius_transform: grade below degree");
    SPoly n = r.num(), d = r.den();
    // Powers n^i d^{g-i}, built incrementally.
    std::vector<SPoly> npow(static_cast<size_t>(g) + 1), dpow(static_cast<size_t>(g) + 1);
    npow[0] = dpow[0] = SPoly::constant(Rat(1));
    for (int i = 1; i <= g; ++i) {
        npow[static_cast<size_t>(i)] = npow[static_cast<size_t>(i - 1)] * n;
        dpow[static_cast<size_t>(i)] = dpow[static_cast<size_t>(i - 1)] * d;
    }
    PolyMat out(P.rows(), P.cols(), g);
    for (int i = 0; i <= deg && i <= P.grade(); ++i) {
        if (P.coeff(i).is_zero()) continue;
        SPoly w = npow[static_cast<size_t>(i)] * dpow[static_cast<size_t>(g - i)];
        out = out + w * PolyMat::from_constant(P.coeff(i));
    }
    return out.with_grade(g);
}

SPoly mobius_scalar(const SPoly& p, int g, const MobiusMap& r) {
    PolyMat q = mobius_transform(PolyMat::from_scalar(p), g, r);
    return q.entry(0, 0);
}

RatMat change_basis_B(const MobiusMap& r, int k) {
    if (k < 1) throw std::invalid_argument("change_basis_B: k must be positive");
    RatMat B(k, k);
    SPoly n = r.num(), d = r.den();
    for (int i = 0; i < k; ++i) {
        // Row i carries n^{k-1-i} d^i expressed in the basis [z^{k-1}, ..., z, 1].
        SPoly row = SPoly::constant(Rat(1));
        for (int t = 0; t < k - 1 - i; ++t) row = row * n;
        for (int t = 0; t < i; ++t) row = row * d;
        for (int j = 0; j < k; ++j) B.at(i, j) = row.coeff(k - 1 - j);
    }
    return B;
}

bool commuting_diagram_check(const PolyMat& P, const Ansatz& v, const MobiusMap& r,
                             std::string* detail) {
    int k = P.grade();
    DLPencil L = build_dl(P, v);
    PolyMat ML = mobius_transform(L.L, 1, r);
    RatMat B = change_basis_B(r, k);
    PolyMat lhs = RatMat::kron(B.transpose(), RatMat::identity(P.rows())) * ML *
                  RatMat::kron(B, RatMat::identity(P.cols()));

    PolyMat Q = mobius_transform(P, k, r);
    SPoly u = mobius_scalar(v.v, k - 1, r);
    DLPencil M = build_dl(Q, Ansatz::from_poly(u.with_grade(k - 1)));
    if (lhs == M.L) return true;
    if (detail) {
        int m = P.rows(), n = P.cols();
        for (int t = 0; t <= 1 && detail; ++t)
            for (int bi = 0; bi < k; ++bi)
                for (int bj = 0; bj < k; ++bj)
                    if (lhs.coeff(t).block(bi * m, bj * n, m, n) !=
                        M.L.coeff(t).block(bi * m, bj * n, m, n)) {
                        *detail = "first differing block: z^" + std::to_string(t) + " (" +
                                  std::to_string(bi + 1) + "," + std::to_string(bj + 1) + ")";
                        detail = nullptr;
                    }
    }
    return false;
}

Eigenstructure transport_eigenstructure(const Eigenstructure& E, const MobiusMap& r) {
    Eigenstructure out;
    out.rank = E.rank;
    out.grade = E.grade;
    out.right_minimal_indices = E.right_minimal_indices;
    out.left_minimal_indices = E.left_minimal_indices;
    out.irrational_warning = E.irrational_warning;
    // lambda d(mu) = n(mu): a finite eigenvalue lambda of P sits at
    // mu = (lambda d - b) / (a - lambda c) in the image.
    for (const auto& [lambda, mults] : E.finite_eigs) {
        Rat denom = r.a - lambda * r.c;
        if (denom.is_zero())
            out.inf_mults = mults;
        else
            out.finite_eigs[(lambda * r.d - r.b) / denom] = mults;
    }
    if (!E.inf_mults.empty()) {
        // lambda = infinity requires d(mu) = 0.
        if (r.c.is_zero())
            out.inf_mults = E.inf_mults;
        else
            out.finite_eigs[-r.d / r.c] = E.inf_mults;
    }
    return out;
}

MobiusMap move_infinity_map(const PolyMat& P, const SPoly* v) {
    int nr = P.normal_rank();
    for (int t = 0;; ++t) {
        // 0, 1, -1, 2, -2, ...
        Rat mu = (t % 2 == 1) ? Rat((t + 1) / 2) : Rat(-(t / 2));
        if (P.eval(mu).rank() == nr && (!v || !v->eval(mu).is_zero()))
            return MobiusMap(mu, Rat(1), Rat(1), Rat(0));  // r(z) = (mu z + 1)/z
    }
}

}  // namespace dlp
