#include "dlp/dlpencil.hpp"

#include <stdexcept>
#include <utility>

namespace dlp {

namespace {

/// Copy into a fresh (gx, gy) grade box, requiring dropped coefficients zero.
BivariateMat regrade(const BivariateMat& a, int gx, int gy) {
    BivariateMat r(a.rows(), a.cols(), gx, gy);
    for (int y = 0; y <= a.gradeY(); ++y)
        for (int x = 0; x <= a.gradeX(); ++x) {
            if (x <= gx && y <= gy)
                r.coeff(y, x) = a.coeff(y, x);
            else if (!a.coeff(y, x).is_zero())
                throw std::logic_error("regrade: nonzero coefficient dropped");
        }
    return r;
}

RatMat omega_column(const std::vector<Rat>& omega) {
    RatMat c(static_cast<int>(omega.size()), 1);
    for (int i = 0; i < c.rows(); ++i) c.at(i, 0) = omega[static_cast<size_t>(i)];
    return c;
}

}  // namespace

Ansatz Ansatz::from_poly(const SPoly& v) {
    if (v.is_zero()) throw std::invalid_argument("Ansatz: zero polynomial");
    Ansatz a;
    int k = v.grade() + 1;
    a.v = v;
    a.omega.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) a.omega[static_cast<size_t>(i)] = v.coeff(k - 1 - i);
    return a;
}

Ansatz Ansatz::from_omega(const std::vector<Rat>& omega) {
    if (omega.empty()) throw std::invalid_argument("Ansatz: empty omega");
    int k = static_cast<int>(omega.size());
    std::vector<Rat> cs(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cs[static_cast<size_t>(k - 1 - i)] = omega[static_cast<size_t>(i)];
    Ansatz a;
    a.v = SPoly(std::move(cs), k - 1);
    a.omega = omega;
    if (a.v.is_zero()) throw std::invalid_argument("Ansatz: zero polynomial");
    return a;
}

DLPencil build_dl(const PolyMat& P, const Ansatz& ansatz) {
    int k = P.grade();
    if (k < 2) throw std::invalid_argument("build_dl: grade must be at least 2");
    if (ansatz.k() != k) throw std::invalid_argument("build_dl: ansatz size does not match grade");
    int m = P.rows(), n = P.cols();
    const SPoly& v = ansatz.v;
    SPoly zv = SPoly::monomial(1) * v;  // z * v(z), grade k

    BivariateMat Px = BivariateMat::in_x(P);
    BivariateMat Py = BivariateMat::in_y(P);
    // B(x,y,z) = [P(y)(x-z)v(x) - P(x)(y-z)v(y)] / (x-y) = N0/(x-y) + z N1/(x-y)
    BivariateMat N0 = Py.mul_x(zv) - Px.mul_y(zv);
    BivariateMat N1 = Px.mul_y(v.with_grade(k)) - Py.mul_x(v.with_grade(k));
    BivariateMat q0 = regrade(N0.div_x_minus_y(), k - 1, k - 1);
    BivariateMat q1 = regrade(N1.div_x_minus_y(), k - 1, k - 1);
    if (!q0.is_symmetric_in_xy() || !q1.is_symmetric_in_xy())
        throw std::logic_error("build_dl: Bezoutian not symmetric in x, y");

    DLPencil out;
    out.L = PolyMat({bivariate_to_block(q0), bivariate_to_block(q1)});
    out.k = k;
    out.ansatz = ansatz;
    out.m = m;
    out.n = n;

    // Contraction identities defining the double ansatz space.
    PolyMat V = PolyMat::vandermonde_vector(k);
    PolyMat Omega = PolyMat::from_constant(omega_column(ansatz.omega));
    PolyMat right = out.L * PolyMat::kron(V, PolyMat::from_constant(RatMat::identity(n)));
    if (right != PolyMat::kron(Omega, P))
        throw std::logic_error("build_dl: right contraction identity failed");
    PolyMat left = PolyMat::kron(V.transpose(), PolyMat::from_constant(RatMat::identity(m))) * out.L;
    if (left != PolyMat::kron(Omega.transpose(), P))
        throw std::logic_error("build_dl: left contraction identity failed");
    return out;
}

bool exclusion_holds(const PolyMat& P, const Ansatz& ansatz) {
    SPoly cofactor;
    auto roots = ansatz.v.rational_roots(&cofactor);
    if (cofactor.degree().value_or(0) > 0)
        throw std::domain_error("exclusion_holds: ansatz polynomial has irrational roots");
    int nr = P.normal_rank();
    for (const auto& [mu, mult] : roots) {
        (void)mult;
        if (P.eval(mu).rank() < nr) return false;
    }
    if (ansatz.v.inf_root_multiplicity() > 0) {
        // Infinity is a root of v; it must not be an eigenvalue of P.
        if (P.coeff(P.grade()).rank() < nr) return false;
    }
    return true;
}

RatMat confluent_vandermonde_W(const std::vector<std::pair<Rat, int>>& roots, int k) {
    int total = 0;
    for (const auto& [mu, l] : roots) {
        (void)mu;
        if (l <= 0) throw std::invalid_argument("confluent_vandermonde_W: nonpositive multiplicity");
        total += l;
    }
    if (total != k) throw std::invalid_argument("confluent_vandermonde_W: multiplicities must sum to k");
    PolyMat V = PolyMat::vandermonde_vector(k);
    RatMat W(k, k);
    int c = 0;
    for (const auto& [mu, l] : roots)
        for (int j = 0; j < l; ++j, ++c) {
            RatMat col = V.derivative(j, /*normalized=*/true).eval(mu);
            for (int r = 0; r < k; ++r) W.at(r, c) = col.at(r, 0);
        }
    return W;
}

BlockEvaluation block_evaluation(const DLPencil& LP, const PolyMat& P, const Rat& mu0) {
    int k = LP.k, m = LP.m, n = LP.n;
    const SPoly& v = LP.ansatz.v;
    if (v.degree().value_or(-1) != k - 1)
        throw std::domain_error("block_evaluation: v has an infinite root; move it first");
    SPoly cofactor;
    auto vroots = v.rational_roots(&cofactor);
    if (cofactor.degree().value_or(0) > 0)
        throw std::domain_error("block_evaluation: v has irrational roots");
    for (const auto& [mu, l] : vroots) {
        (void)l;
        if (mu == mu0) throw std::invalid_argument("block_evaluation: mu0 is a root of v");
    }

    BlockEvaluation be;
    std::vector<std::pair<Rat, int>> nodes;
    nodes.emplace_back(mu0, 1);
    for (const auto& r : nodes) {
        be.nodes.push_back(r.first);
        be.mults.push_back(r.second);
    }
    for (const auto& r : vroots) {
        nodes.push_back(r);
        be.nodes.push_back(r.first);
        be.mults.push_back(r.second);
    }
    be.W = confluent_vandermonde_W(nodes, k);

    RatMat A = RatMat::kron(be.W.transpose(), RatMat::identity(m)) * LP.L.eval(mu0) *
               RatMat::kron(be.W, RatMat::identity(n));

    SPoly w = SPoly::linear_root(mu0) * v;  // degree k
    RatMat check(k * m, k * n);
    int off = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        const Rat& mu = nodes[i].first;
        int l = nodes[i].second;
        Rat ci = w.derivative(l, /*normalized=*/true).eval(mu);
        if (ci.is_zero()) throw std::logic_error("block_evaluation: vanishing constant c_i");
        RatMat Qi = A.block(off * m, off * n, l * m, l * n);
        RatMat Pmu = P.eval(mu);
        // Antitriangular pattern: zero above the antidiagonal, c_i P(mu_i) on it.
        for (int b = 0; b < l; ++b)
            for (int a = 0; a < l; ++a) {
                RatMat blk = Qi.block(b * m, a * n, m, n);
                if (a + b < l - 1 && !blk.is_zero())
                    throw std::logic_error("block_evaluation: nonzero block above antidiagonal");
                if (a + b == l - 1 && blk != ci * Pmu)
                    throw std::logic_error("block_evaluation: antidiagonal block mismatch");
            }
        check.set_block(off * m, off * n, Qi);
        be.Q.push_back(std::move(Qi));
        be.c.push_back(ci);
        off += l;
    }
    if (check != A)
        throw std::logic_error("block_evaluation: nonzero coupling between distinct nodes");
    return be;
}

StructuredBasis structured_minimal_basis(const DLPencil& LP, const PolyMat& P,
                                         const MinimalBasis& M) {
    int k = LP.k, n = LP.n, p = M.basis.cols();
    if (M.basis.rows() != n)
        throw std::invalid_argument("structured_minimal_basis: basis size mismatch");
    if (!exclusion_holds(P, LP.ansatz))
        throw std::domain_error("structured_minimal_basis: eigenvalue exclusion fails");
    const SPoly& v = LP.ansatz.v;
    if (v.degree().value_or(-1) != k - 1)
        throw std::domain_error("structured_minimal_basis: v has an infinite root; move it first");
    SPoly cofactor;
    auto vroots = v.rational_roots(&cofactor);
    if (cofactor.degree().value_or(0) > 0)
        throw std::domain_error("structured_minimal_basis: v has irrational roots");

    StructuredBasis sb;
    PolyMat V = PolyMat::vandermonde_vector(k);
    sb.D = PolyMat::kron(V, M.basis);

    // C: for each root mu_j of multiplicity l_j, plain derivatives of D of
    // orders 0..l_j-1 evaluated at mu_j; node-major, derivative-minor.
    sb.C = RatMat(k * n, (k - 1) * p);
    std::vector<RatMat> cblocks;
    int c0 = 0;
    for (const auto& [mu, l] : vroots)
        for (int a = 0; a < l; ++a) {
            RatMat blk = sb.D.derivative(a, /*normalized=*/false).eval(mu);
            sb.C.set_block(0, c0, blk);
            cblocks.push_back(std::move(blk));
            c0 += p;
        }

    sb.hermite = hermite_basis(vroots);
    sb.E = sb.D;
    for (size_t i = 0; i < sb.hermite.size(); ++i)
        sb.E = sb.E - sb.hermite[i] * PolyMat::from_constant(cblocks[i]);

    PolyMat Ediv(k * n, p, std::max(sb.E.grade() - (k - 1), 0));
    for (int i = 0; i < k * n; ++i)
        for (int j = 0; j < p; ++j)
            Ediv.set_entry(i, j, SPoly::div_exact(sb.E.entry(i, j), v));

    sb.F = PolyMat::hstack(PolyMat::from_constant(sb.C), Ediv);
    if (!(LP.L * sb.F).is_zero())
        throw std::logic_error("structured_minimal_basis: F is not in the kernel");
    if (p > 0 && !is_minimal_basis(sb.F).ok)
        throw std::logic_error("structured_minimal_basis: F fails the minimality criterion");
    return sb;
}

PolyMat arrowhead_pencil(const PolyMat& P, const std::vector<Rat>& mus, const Rat& mu0) {
    int k = static_cast<int>(mus.size()) + 1;
    if (P.grade() != k) throw std::invalid_argument("arrowhead_pencil: need k-1 roots for grade k");
    for (size_t i = 0; i < mus.size(); ++i) {
        if (mus[i] == mu0) throw std::invalid_argument("arrowhead_pencil: mu0 must differ from the roots");
        for (size_t j = i + 1; j < mus.size(); ++j)
            if (mus[i] == mus[j]) throw std::invalid_argument("arrowhead_pencil: repeated root");
    }
    int m = P.rows(), n = P.cols();
    SPoly v = SPoly::constant(Rat(1));
    for (const Rat& mu : mus) v = v * SPoly::linear_root(mu);
    DLPencil LP = build_dl(P, Ansatz::from_poly(v));

    std::vector<std::pair<Rat, int>> nodes;
    nodes.emplace_back(mu0, 1);
    for (const Rat& mu : mus) nodes.emplace_back(mu, 1);
    RatMat W = confluent_vandermonde_W(nodes, k);
    PolyMat A = RatMat::kron(W.transpose(), RatMat::identity(m)) * LP.L *
                RatMat::kron(W, RatMat::identity(n));

    // Explicit arrowhead form: A(z) = A(mu0) + (z - mu0) A1 with A(mu0) block
    // diagonal and A1 supported on the diagonal, first block row and column.
    SPoly dv = v.derivative();
    RatMat Pmu0 = P.eval(mu0);
    RatMat dPmu0 = P.derivative().eval(mu0);
    RatMat A1(k * m, k * n), Amu0(k * m, k * n);
    Amu0.set_block(0, 0, v.eval(mu0) * Pmu0);
    A1.set_block(0, 0, v.eval(mu0) * dPmu0 - dv.eval(mu0) * Pmu0);
    for (int i = 1; i < k; ++i) {
        const Rat& mui = mus[static_cast<size_t>(i - 1)];
        RatMat Pmui = P.eval(mui);
        Amu0.set_block(i * m, i * n, (mui - mu0) * dv.eval(mui) * Pmui);
        A1.set_block(i * m, i * n, -dv.eval(mui) * Pmui);
        RatMat coupling = (v.eval(mu0) / (mui - mu0)) * Pmui;
        A1.set_block(0, i * n, coupling);
        A1.set_block(i * m, 0, coupling);
    }
    PolyMat expected({Amu0 - mu0 * A1, A1});
    if (A != expected) throw std::logic_error("arrowhead_pencil: explicit block formula mismatch");
    return A;
}

}  // namespace dlp
