#include "dlp/eigenstructure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dlp {

namespace {

// Working grid of scalar polynomials for the Smith reduction.
using Grid = std::vector<std::vector<SPoly>>;

Grid to_grid(const PolyMat& P) {
    Grid g(static_cast<size_t>(P.rows()), std::vector<SPoly>(static_cast<size_t>(P.cols())));
    for (int i = 0; i < P.rows(); ++i)
        for (int j = 0; j < P.cols(); ++j) g[i][j] = P.entry(i, j);
    return g;
}

PolyMat from_grid(const Grid& g) {
    int m = static_cast<int>(g.size());
    int n = m > 0 ? static_cast<int>(g[0].size()) : 0;
    int maxdeg = 0;
    for (const auto& row : g)
        for (const auto& e : row)
            if (auto d = e.degree()) maxdeg = std::max(maxdeg, *d);
    PolyMat P(m, n, maxdeg);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) P.set_entry(i, j, g[i][j].with_grade(maxdeg));
    return P;
}

int deg_or_big(const SPoly& p) {
    auto d = p.degree();
    return d ? *d : INT_MAX;
}

}  // namespace

SPoly poly_det(const PolyMat& P) {
    if (P.rows() != P.cols()) throw std::invalid_argument("poly_det: not square");
    int n = P.rows();
    if (n == 0) return SPoly::constant(Rat(1));
    int bound = P.grade() * n;
    // Probe points 0, 1, -1, 2, -2, ...
    std::vector<Rat> xs;
    std::vector<Rat> ys;
    long probe = 0;
    for (int t = 0; t <= bound; ++t) {
        Rat x(probe);
        xs.push_back(x);
        ys.push_back(P.eval(x).det());
        probe = probe > 0 ? -probe : -probe + 1;
    }
    // Lagrange interpolation via Newton's divided differences.
    std::vector<Rat> coef = ys;
    for (size_t j = 1; j < xs.size(); ++j)
        for (size_t i = xs.size() - 1; i >= j; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    SPoly result = SPoly::constant(coef.back());
    for (size_t i = xs.size() - 1; i-- > 0;)
        result = result * SPoly::linear_root(xs[i]) + SPoly::constant(coef[i]);
    return result;
}

SmithForm smith_form(const PolyMat& P) {
    int m = P.rows(), n = P.cols();
    Grid A = to_grid(P);
    Grid U(static_cast<size_t>(m), std::vector<SPoly>(static_cast<size_t>(m)));
    Grid V(static_cast<size_t>(n), std::vector<SPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < m; ++i) U[i][i] = SPoly::constant(Rat(1));
    for (int j = 0; j < n; ++j) V[j][j] = SPoly::constant(Rat(1));

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        std::swap(A[a], A[b]);
        std::swap(U[a], U[b]);
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m; ++i) std::swap(A[i][a], A[i][b]);
        for (int i = 0; i < n; ++i) std::swap(V[i][a], V[i][b]);
    };
    auto row_axpy = [&](int dst, int src, const SPoly& f) {  // row dst += f * row src
        for (int j = 0; j < n; ++j) A[dst][j] = A[dst][j] + f * A[src][j];
        for (int j = 0; j < m; ++j) U[dst][j] = U[dst][j] + f * U[src][j];
    };
    auto col_axpy = [&](int dst, int src, const SPoly& f) {
        for (int i = 0; i < m; ++i) A[i][dst] = A[i][dst] + f * A[i][src];
        for (int i = 0; i < n; ++i) V[i][dst] = V[i][dst] + f * V[i][src];
    };
    auto scale_row = [&](int r, const Rat& c) {
        for (int j = 0; j < n; ++j) A[r][j] = c * A[r][j];
        for (int j = 0; j < m; ++j) U[r][j] = c * U[r][j];
    };

    int t = 0;
    int steps = std::min(m, n);
    for (; t < steps; ++t) {
        // Locate a nonzero minimal-degree pivot in the trailing block.
        bool again = true;
        bool empty = false;
        while (again) {
            int pi = -1, pj = -1, best = INT_MAX;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    int d = deg_or_big(A[i][j]);
                    if (d < best) { best = d; pi = i; pj = j; }
                }
            if (pi < 0 || best == INT_MAX) { empty = true; break; }
            swap_rows(t, pi);
            swap_cols(t, pj);
            scale_row(t, A[t][t].leading_coeff().inv());  // monic pivot, controls blowup

            bool reduced = true;
            for (int i = t + 1; i < m; ++i) {
                if (A[i][t].is_zero()) continue;
                auto [q, r] = SPoly::divrem(A[i][t], A[t][t]);
                row_axpy(i, t, -q);
                if (!A[i][t].is_zero()) reduced = false;  // degree dropped; iterate
            }
            for (int j = t + 1; j < n; ++j) {
                if (A[t][j].is_zero()) continue;
                auto [q, r] = SPoly::divrem(A[t][j], A[t][t]);
                col_axpy(j, t, -q);
                if (!A[t][j].is_zero()) reduced = false;
            }
            if (!reduced) continue;

            // Divisibility of the trailing block by the pivot.
            int bi = -1, bj = -1;
            for (int i = t + 1; i < m && bi < 0; ++i)
                for (int j = t + 1; j < n; ++j) {
                    if (A[i][j].is_zero()) continue;
                    auto [q, r] = SPoly::divrem(A[i][j], A[t][t]);
                    (void)q;
                    if (!r.is_zero()) { bi = i; bj = j; break; }
                }
            if (bi >= 0) {
                row_axpy(t, bi, SPoly::constant(Rat(1)));  // drag the offender into row t
                (void)bj;
                continue;
            }
            again = false;
        }
        if (empty) break;
    }

    SmithForm out;
    out.rank = t;
    out.invariant_factors.reserve(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) out.invariant_factors.push_back(A[i][i]);
    out.U = from_grid(U);
    out.V = from_grid(V);

    // Construction checks: re-multiplication and the divisibility chain.
    PolyMat D(m, n, std::max(P.grade(), out.U.grade() + P.grade() + out.V.grade()));
    for (int i = 0; i < t; ++i) D.set_entry(i, i, out.invariant_factors[i].with_grade(D.grade()));
    PolyMat UPV = out.U * P * out.V;
    if (UPV != D) throw std::logic_error("smith_form: re-multiplication check failed");
    for (int i = 0; i + 1 < t; ++i) {
        auto [q, r] = SPoly::divrem(out.invariant_factors[i + 1], out.invariant_factors[i]);
        (void)q;
        if (!r.is_zero()) throw std::logic_error("smith_form: divisibility chain broken");
    }
    return out;
}

MinimalBasisDiagnostics is_minimal_basis(const PolyMat& A) {
    MinimalBasisDiagnostics d;
    int p = A.cols();
    if (A.rows() < p) return d;
    for (int j = 0; j < p; ++j)
        if (!A.col_degree(j)) return d;  // zero column: not a basis

    SmithForm s = smith_form(A);
    d.full_rank_everywhere = (s.rank == p);
    if (d.full_rank_everywhere)
        for (const auto& f : s.invariant_factors)
            if (auto deg = f.degree(); deg && *deg > 0) d.full_rank_everywhere = false;

    d.high_order_full_rank = (A.high_order_coefficient().rank() == p);
    d.ok = d.full_rank_everywhere && d.high_order_full_rank;
    return d;
}

namespace {

// Convolution (block-Toeplitz) matrix of P against vectors of degree <= d:
// row block s (s = 0..grade+d), column block t, entry P_{s-t}.
RatMat toeplitz_system(const PolyMat& P, int d) {
    int m = P.rows(), n = P.cols(), k = P.grade();
    RatMat T(m * (k + d + 1), n * (d + 1));
    for (int s = 0; s <= k + d; ++s)
        for (int t = 0; t <= d; ++t) {
            int idx = s - t;
            if (idx < 0 || idx > k) continue;
            T.set_block(s * m, t * n, P.coeff(idx));
        }
    return T;
}

PolyMat column_from_stacked(const RatMat& v, int n, int d) {
    PolyMat c(n, 1, std::max(d, 0));
    for (int t = 0; t <= d; ++t)
        for (int i = 0; i < n; ++i) c.coeff(t).at(i, 0) = v.at(t * n + i, 0);
    return c;
}

}  // namespace

MinimalBasis minimal_basis(const PolyMat& P) {
    int n = P.cols();
    int r = P.normal_rank();
    int p = n - r;
    MinimalBasis out;
    out.basis = PolyMat(n, 0, 0);
    if (p == 0) return out;

    int sweep_bound = P.grade() * r;  // every minimal index <= k*r
    std::vector<PolyMat> selected;
    std::vector<int> degrees;

    for (int d = 0; d <= sweep_bound && static_cast<int>(selected.size()) < p; ++d) {
        RatMat N = toeplitz_system(P, d).nullspace();
        if (N.cols() == 0) continue;
        // Shift span of already selected columns inside degree-<=d solutions.
        int shift_cols = 0;
        for (int deg : degrees) shift_cols += d - deg + 1;
        RatMat span(n * (d + 1), shift_cols);
        int c = 0;
        for (size_t si = 0; si < selected.size(); ++si)
            for (int j = 0; j + degrees[si] <= d; ++j) {
                // z^j * selected[si]
                for (int t = 0; t <= degrees[si]; ++t)
                    for (int i = 0; i < n; ++i)
                        span.at((t + j) * n + i, c) = selected[si].coeff(t).at(i, 0);
                ++c;
            }
        int base_rank = span.rank();
        int want = N.cols() - base_rank;
        RatMat cur = span;
        int cur_rank = base_rank;
        for (int j = 0; j < N.cols() && want > 0; ++j) {
            RatMat cand = N.col(j);
            RatMat ext = RatMat::hstack(cur, cand);
            if (ext.rank() > cur_rank) {
                cur = ext;
                ++cur_rank;
                --want;
                selected.push_back(column_from_stacked(cand, n, d));
                degrees.push_back(d);
            }
        }
    }

    if (static_cast<int>(selected.size()) != p)
        throw std::logic_error("minimal_basis: degree sweep exceeded the index sum bound");

    int maxdeg = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    PolyMat B(n, p, maxdeg);
    for (int j = 0; j < p; ++j)
        for (int t = 0; t <= degrees[j]; ++t)
            B.coeff(t).set_block(0, j, selected[j].coeff(t));
    out.basis = B;
    out.indices = degrees;  // ascending by construction of the sweep

    if ((P * out.basis).degree().has_value())
        throw std::logic_error("minimal_basis: product with owner is nonzero");
    if (!is_minimal_basis(out.basis).ok)
        throw std::logic_error("minimal_basis: Forney criterion failed");
    return out;
}

std::vector<int> partial_multiplicities_at(const PolyMat& P, const Rat& lambda) {
    SmithForm s = smith_form(P);
    std::vector<int> mults;
    for (const auto& f : s.invariant_factors) {
        int t = f.root_multiplicity(lambda);
        if (t > 0) mults.push_back(t);
    }
    std::sort(mults.begin(), mults.end());
    return mults;
}

std::vector<int> infinite_multiplicities(const PolyMat& P) {
    return partial_multiplicities_at(P.reversal(P.grade()), Rat(0));
}

int Eigenstructure::index_sum() const {
    int s = 0;
    for (const auto& [lam, ms] : finite_eigs) s += std::accumulate(ms.begin(), ms.end(), 0);
    s += std::accumulate(inf_mults.begin(), inf_mults.end(), 0);
    s += std::accumulate(right_minimal_indices.begin(), right_minimal_indices.end(), 0);
    s += std::accumulate(left_minimal_indices.begin(), left_minimal_indices.end(), 0);
    return s;
}

bool Eigenstructure::operator==(const Eigenstructure& o) const {
    return finite_eigs == o.finite_eigs && inf_mults == o.inf_mults &&
           right_minimal_indices == o.right_minimal_indices &&
           left_minimal_indices == o.left_minimal_indices && rank == o.rank &&
           grade == o.grade;
}

Eigenstructure full_eigenstructure(const PolyMat& P, const std::vector<Rat>& candidate_eigs) {
    Eigenstructure e;
    e.grade = P.grade();
    SmithForm s = smith_form(P);
    e.rank = s.rank;

    std::set<Rat> candidates(candidate_eigs.begin(), candidate_eigs.end());
    int unresolved_degree = 0;
    if (s.rank > 0) {
        const SPoly& dr = s.invariant_factors.back();
        SPoly cofactor;
        for (const auto& [root, mult] : dr.rational_roots(&cofactor)) {
            (void)mult;
            candidates.insert(root);
        }
        if (auto cd = cofactor.degree(); cd && *cd > 0) {
            e.irrational_warning = true;
            unresolved_degree = *cd;
        }
    }
    for (const Rat& lam : candidates) {
        std::vector<int> mults;
        for (const auto& f : s.invariant_factors) {
            int t = f.root_multiplicity(lam);
            if (t > 0) mults.push_back(t);
        }
        std::sort(mults.begin(), mults.end());
        if (!mults.empty()) e.finite_eigs[lam] = mults;
    }
    e.inf_mults = infinite_multiplicities(P);
    e.right_minimal_indices = minimal_basis(P).indices;
    e.left_minimal_indices = minimal_basis(P.transpose()).indices;

    if (!e.irrational_warning && e.index_sum() != e.grade * e.rank)
        throw IndexSumViolation("full_eigenstructure: index sum theorem violated");
    (void)unresolved_degree;
    return e;
}

}  // namespace dlp
