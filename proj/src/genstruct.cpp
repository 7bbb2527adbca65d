#include "dlp/genstruct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dlp {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64::below: zero bound");
    // Rejection sampling for exact uniformity (and thus portability).
    std::uint64_t limit = ~0ULL - (~0ULL % bound);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

long SplitMix64::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

void KroneckerSpec::validate() const {
    if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("KroneckerSpec: empty dimensions");
    if (rank < 0 || rank > std::min(m, n)) throw std::invalid_argument("KroneckerSpec: bad rank");
    if (static_cast<int>(right_indices.size()) != n - rank)
        throw std::invalid_argument("KroneckerSpec: need n - rank right indices");
    if (static_cast<int>(left_indices.size()) != m - rank)
        throw std::invalid_argument("KroneckerSpec: need m - rank left indices");
    long sum = 0;
    for (const auto& [lambda, mults] : finite_eigs) {
        (void)lambda;
        if (mults.empty() || static_cast<int>(mults.size()) > rank)
            throw std::invalid_argument("KroneckerSpec: bad multiplicity count at an eigenvalue");
        for (int e : mults) {
            if (e < 1) throw std::invalid_argument("KroneckerSpec: multiplicities must be positive");
            sum += e;
        }
    }
    if (static_cast<int>(inf_mults.size()) > rank)
        throw std::invalid_argument("KroneckerSpec: too many infinite multiplicities");
    for (int e : inf_mults) {
        if (e < 1) throw std::invalid_argument("KroneckerSpec: multiplicities must be positive");
        sum += e;
    }
    for (int e : right_indices) {
        if (e < 0) throw std::invalid_argument("KroneckerSpec: negative minimal index");
        sum += e;
    }
    for (int e : left_indices) {
        if (e < 0) throw std::invalid_argument("KroneckerSpec: negative minimal index");
        sum += e;
    }
    if (sum != static_cast<long>(k) * rank)
        throw std::invalid_argument("KroneckerSpec: index sum identity violated");
}

Eigenstructure KroneckerSpec::as_eigenstructure() const {
    validate();
    Eigenstructure e;
    e.finite_eigs = finite_eigs;
    e.inf_mults = inf_mults;
    e.right_minimal_indices = right_indices;
    e.left_minimal_indices = left_indices;
    e.rank = rank;
    e.grade = k;
    for (auto& [lambda, mults] : e.finite_eigs) {
        (void)lambda;
        std::sort(mults.begin(), mults.end());
    }
    std::sort(e.inf_mults.begin(), e.inf_mults.end());
    std::sort(e.right_minimal_indices.begin(), e.right_minimal_indices.end());
    std::sort(e.left_minimal_indices.begin(), e.left_minimal_indices.end());
    return e;
}

namespace {

struct Item {
    int lambda_id;  // index into the eigenvalue list, -1 for infinity
    int weight;
};

/// Exact-fill backtracking: every bin must reach exactly its capacity, with at
/// most one item per eigenvalue (and one infinity item) per bin.
bool pack(std::vector<Item>& items, size_t next, std::vector<int>& remaining,
          std::vector<std::vector<int>>& content) {
    if (next == items.size()) {
        for (int r : remaining)
            if (r != 0) return false;
        return true;
    }
    const Item& it = items[next];
    for (size_t b = 0; b < remaining.size(); ++b) {
        if (remaining[b] < it.weight) continue;
        bool conflict = false;
        for (int other : content[b])
            if (items[static_cast<size_t>(other)].lambda_id == it.lambda_id) conflict = true;
        if (conflict) continue;
        remaining[b] -= it.weight;
        content[b].push_back(static_cast<int>(next));
        if (pack(items, next + 1, remaining, content)) return true;
        content[b].pop_back();
        remaining[b] += it.weight;
    }
    return false;
}

/// g(z) for one bin: the product of its finite elementary divisors. The
/// leftover capacity (an infinity item, or nothing) shows up as grade slack.
SPoly bin_poly(const std::vector<int>& content, const std::vector<Item>& items,
               const std::vector<Rat>& lambdas) {
    SPoly g = SPoly::constant(Rat(1));
    for (int idx : content) {
        const Item& it = items[static_cast<size_t>(idx)];
        if (it.lambda_id < 0) continue;  // infinity: realized by degree slack
        for (int t = 0; t < it.weight; ++t)
            g = g * SPoly::linear_root(lambdas[static_cast<size_t>(it.lambda_id)]);
    }
    return g;
}

/// Random invertible constant matrix: identity mixed by seeded transvections
/// and swaps with coefficients in {-3..3}.
RatMat mixing_matrix(int size, SplitMix64& rng) {
    RatMat U = RatMat::identity(size);
    int ops = 2 * size;
    for (int t = 0; t < ops; ++t) {
        if (size < 2) break;
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(size)));
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(size)));
        if (i == j) continue;
        if (rng.below(4) == 0) {
            for (int c = 0; c < size; ++c) std::swap(U.at(i, c), U.at(j, c));
        } else {
            long f = rng.range(-3, 3);
            if (f == 0) f = 1;
            for (int c = 0; c < size; ++c) U.at(i, c) = U.at(i, c) + Rat(f) * U.at(j, c);
        }
    }
    return U;
}

}  // namespace

PolyMat generate(const KroneckerSpec& spec) {
    spec.validate();
    int k = spec.k;

    std::vector<int> right_pos, left_pos;
    int zero_cols = 0, zero_rows = 0;
    for (int e : spec.right_indices)
        if (e > 0)
            right_pos.push_back(e);
        else
            ++zero_cols;
    for (int e : spec.left_indices)
        if (e > 0)
            left_pos.push_back(e);
        else
            ++zero_rows;
    std::sort(right_pos.rbegin(), right_pos.rend());
    std::sort(left_pos.rbegin(), left_pos.rend());

    int a = static_cast<int>(right_pos.size());
    int b = static_cast<int>(left_pos.size());
    int c = spec.rank - a - b;
    if (c < 0)
        throw std::invalid_argument("generate: more nonzero minimal indices than rank carriers");

    std::vector<int> caps;
    for (int e : right_pos) {
        if (e > k) throw std::invalid_argument("generate: minimal index above grade unsupported");
        caps.push_back(k - e);
    }
    for (int e : left_pos) {
        if (e > k) throw std::invalid_argument("generate: minimal index above grade unsupported");
        caps.push_back(k - e);
    }
    for (int t = 0; t < c; ++t) caps.push_back(k);

    std::vector<Rat> lambdas;
    std::vector<Item> items;
    for (const auto& [lambda, mults] : spec.finite_eigs) {
        lambdas.push_back(lambda);
        for (int e : mults) items.push_back({static_cast<int>(lambdas.size()) - 1, e});
    }
    for (int e : spec.inf_mults) items.push_back({-1, e});
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& x, const Item& y) { return x.weight > y.weight; });

    std::vector<int> remaining = caps;
    std::vector<std::vector<int>> content(caps.size());
    if (!pack(items, 0, remaining, content))
        throw std::invalid_argument("generate: elementary divisors do not fit the block capacities");

    // Infinity items need genuine degree slack; a bin filled below capacity by
    // anything other than its single infinity item is a packing bug.
    for (size_t bin = 0; bin < caps.size(); ++bin) {
        int inf_weight = 0;
        for (int idx : content[bin])
            if (items[static_cast<size_t>(idx)].lambda_id < 0)
                inf_weight += items[static_cast<size_t>(idx)].weight;
        SPoly g = bin_poly(content[bin], items, lambdas);
        if (g.degree().value_or(0) + inf_weight != caps[bin])
            throw std::logic_error("generate: bin capacity accounting failed");
    }

    PolyMat core(spec.m, spec.n, k);
    int row = 0, col = 0;
    size_t bin = 0;
    for (int t = 0; t < a; ++t, ++bin) {
        SPoly g = bin_poly(content[bin], items, lambdas);
        int eps = right_pos[static_cast<size_t>(t)];
        core.set_entry(row, col, (g * SPoly::monomial(eps)).with_grade(k));
        core.set_entry(row, col + 1, g.with_grade(k));
        row += 1;
        col += 2;
    }
    for (int t = 0; t < b; ++t, ++bin) {
        SPoly g = bin_poly(content[bin], items, lambdas);
        int eta = left_pos[static_cast<size_t>(t)];
        core.set_entry(row, col, (g * SPoly::monomial(eta)).with_grade(k));
        core.set_entry(row + 1, col, g.with_grade(k));
        row += 2;
        col += 1;
    }
    for (int t = 0; t < c; ++t, ++bin) {
        SPoly g = bin_poly(content[bin], items, lambdas);
        core.set_entry(row, col, g.with_grade(k));
        row += 1;
        col += 1;
    }
    // Remaining rows/columns stay identically zero (zero minimal indices).
    if (row + zero_rows != spec.m || col + zero_cols != spec.n)
        throw std::logic_error("generate: block layout does not tile the matrix");

    SplitMix64 rng(spec.seed);
    RatMat U = mixing_matrix(spec.m, rng);
    RatMat V = mixing_matrix(spec.n, rng);
    PolyMat P = U * core * V;

    if (!(full_eigenstructure(P) == spec.as_eigenstructure()))
        throw std::logic_error("generate: realized eigenstructure differs from the spec");
    return P;
}

Ansatz admissible_ansatz(const PolyMat& P, int k, bool want_violation, std::uint64_t seed) {
    Eigenstructure E = full_eigenstructure(P);
    SplitMix64 rng(seed);
    int nr = P.normal_rank();
    auto is_eigen = [&](const Rat& mu) { return P.eval(mu).rank() < nr; };

    auto draw_admissible = [&]() {
        for (;;) {
            Rat cand(rng.range(-6, 6), rng.range(1, 3));
            if (!is_eigen(cand)) return cand;
        }
    };

    SPoly v = SPoly::constant(Rat(1));
    int needed = k - 1;
    if (want_violation) {
        if (!E.finite_eigs.empty()) {
            v = v * SPoly::linear_root(E.finite_eigs.begin()->first);
            needed -= 1;
        } else if (!E.inf_mults.empty()) {
            needed -= 1;  // leave v one degree short: a root at infinity
        } else {
            throw std::invalid_argument("admissible_ansatz: P has no eigenvalues to collide with");
        }
    }
    for (int t = 0; t < needed; ++t) v = v * SPoly::linear_root(draw_admissible());
    return Ansatz::from_poly(v.with_grade(k - 1));
}

}  // namespace dlp
