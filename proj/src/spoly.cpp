#include "dlp/spoly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dlp/ratmat.hpp"

namespace dlp {

SPoly::SPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Rat(0));
}

SPoly::SPoly(std::vector<Rat> coeffs, int grade) : coeffs_(std::move(coeffs)) {
    if (grade < 0) throw std::invalid_argument("SPoly: negative grade");
    coeffs_.resize(static_cast<size_t>(grade) + 1, Rat(0));
}

SPoly SPoly::zero(int grade) { return SPoly(std::vector<Rat>{}, grade); }

SPoly SPoly::constant(const Rat& c, int grade) {
    return SPoly(std::vector<Rat>{c}, grade);
}

SPoly SPoly::monomial(int power, const Rat& c) {
    std::vector<Rat> v(static_cast<size_t>(power) + 1, Rat(0));
    v.back() = c;
    return SPoly(std::move(v));
}

SPoly SPoly::linear_root(const Rat& root) {
    return SPoly(std::vector<Rat>{-root, Rat(1)});
}

std::optional<int> SPoly::degree() const {
    for (int i = grade(); i >= 0; --i)
        if (!coeffs_[i].is_zero()) return i;
    return std::nullopt;
}

const Rat& SPoly::coeff(int i) const {
    static const Rat kZero(0);
    if (i < 0 || i > grade()) return kZero;
    return coeffs_[i];
}

Rat SPoly::leading_coeff() const {
    auto d = degree();
    if (!d) throw std::domain_error("SPoly: zero polynomial has no leading coefficient");
    return coeffs_[*d];
}

int SPoly::inf_root_multiplicity() const {
    auto d = degree();
    if (!d) throw std::domain_error("SPoly: zero polynomial");
    return grade() - *d;
}

SPoly SPoly::with_grade(int g) const {
    auto d = degree();
    if (d && g < *d) throw std::invalid_argument("SPoly: grade below degree");
    std::vector<Rat> c = coeffs_;
    c.resize(static_cast<size_t>(g) + 1, Rat(0));
    return SPoly(std::move(c));
}

SPoly SPoly::operator-() const {
    std::vector<Rat> c = coeffs_;
    for (auto& x : c) x = -x;
    return SPoly(std::move(c));
}

SPoly operator+(const SPoly& a, const SPoly& b) {
    int g = std::max(a.grade(), b.grade());
    std::vector<Rat> c(static_cast<size_t>(g) + 1, Rat(0));
    for (int i = 0; i <= g; ++i) c[i] = a.coeff(i) + b.coeff(i);
    return SPoly(std::move(c));
}

SPoly operator-(const SPoly& a, const SPoly& b) { return a + (-b); }

SPoly operator*(const SPoly& a, const SPoly& b) {
    int g = a.grade() + b.grade();
    std::vector<Rat> c(static_cast<size_t>(g) + 1, Rat(0));
    for (int i = 0; i <= a.grade(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= b.grade(); ++j)
            c[i + j] += a.coeff(i) * b.coeff(j);
    }
    return SPoly(std::move(c));
}

SPoly operator*(const Rat& c, const SPoly& a) {
    std::vector<Rat> v = a.coeffs();
    for (auto& x : v) x = c * x;
    return SPoly(std::move(v));
}

bool operator==(const SPoly& a, const SPoly& b) {
    int g = std::max(a.grade(), b.grade());
    for (int i = 0; i <= g; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

std::pair<SPoly, SPoly> SPoly::divrem(const SPoly& a, const SPoly& b) {
    auto db = b.degree();
    if (!db) throw std::domain_error("SPoly::divrem: division by zero polynomial");
    auto da = a.degree();
    if (!da || *da < *db) return {SPoly::zero(), a};
    std::vector<Rat> rem = a.coeffs_;
    rem.resize(static_cast<size_t>(*da) + 1);
    std::vector<Rat> q(static_cast<size_t>(*da - *db) + 1, Rat(0));
    Rat lb = b.coeffs_[*db];
    for (int i = *da; i >= *db; --i) {
        if (rem[i].is_zero()) continue;
        Rat f = rem[i] / lb;
        q[i - *db] = f;
        for (int j = 0; j <= *db; ++j) rem[i - *db + j] -= f * b.coeffs_[j];
    }
    return {SPoly(std::move(q)), SPoly(std::move(rem))};
}

SPoly SPoly::div_exact(const SPoly& a, const SPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("SPoly::div_exact: nonzero remainder");
    return q;
}

SPoly SPoly::gcd(const SPoly& a, const SPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("SPoly::gcd: both inputs zero");
    SPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divrem(x, y);
        (void)q;
        x = y;
        y = r;
    }
    return x.monic();
}

SPoly SPoly::derivative(int order, bool normalized) const {
    if (order < 0) throw std::invalid_argument("SPoly::derivative: negative order");
    std::vector<Rat> c = coeffs_;
    for (int o = 0; o < order; ++o) {
        std::vector<Rat> d(std::max<size_t>(c.size() - 1, 1), Rat(0));
        for (size_t i = 1; i < c.size(); ++i)
            d[i - 1] = Rat(static_cast<long>(i)) * c[i];
        c = std::move(d);
    }
    SPoly r(std::move(c));
    if (normalized && order > 1) r = factorial(order).inv() * r;
    return r;
}

Rat SPoly::eval(const Rat& z) const {
    Rat r(0);
    for (int i = grade(); i >= 0; --i) r = r * z + coeffs_[i];
    return r;
}

SPoly SPoly::reversal(int wrt_grade) const {
    auto d = degree();
    if (d && wrt_grade < *d)
        throw std::invalid_argument("SPoly::reversal: grade below degree");
    std::vector<Rat> c(static_cast<size_t>(wrt_grade) + 1, Rat(0));
    for (int i = 0; i <= wrt_grade; ++i) c[wrt_grade - i] = coeff(i);
    return SPoly(std::move(c));
}

SPoly SPoly::monic() const { return leading_coeff().inv() * *this; }

int SPoly::root_multiplicity(const Rat& root, SPoly* quotient) const {
    if (is_zero()) throw std::domain_error("SPoly: root multiplicity of zero polynomial");
    SPoly cur = *this;
    SPoly lin = linear_root(root);
    int t = 0;
    while (true) {
        auto [q, r] = divrem(cur, lin);
        if (!r.is_zero()) break;
        cur = q;
        ++t;
    }
    if (quotient) *quotient = cur;
    return t;
}

std::vector<std::pair<Rat, int>> SPoly::rational_roots(SPoly* cofactor) const {
    if (is_zero()) throw std::domain_error("SPoly: roots of zero polynomial");
    SPoly cur = *this;
    std::vector<std::pair<Rat, int>> out;

    int t0 = cur.root_multiplicity(Rat(0), &cur);
    if (t0 > 0) out.emplace_back(Rat(0), t0);

    auto d = cur.degree();
    if (d && *d > 0) {
        // Integerize: candidates p/q with p | a0, q | ad.
        mpz_class den_lcm(1);
        for (int i = 0; i <= *d; ++i)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), cur.coeff(i).den().get_mpz_t());
        std::vector<mpz_class> ic(static_cast<size_t>(*d) + 1);
        for (int i = 0; i <= *d; ++i)
            ic[i] = cur.coeff(i).num() * (den_lcm / cur.coeff(i).den());
        auto divisors = [](mpz_class n) {
            n = abs(n);
            std::vector<mpz_class> ds;
            for (mpz_class i = 1; i * i <= n; ++i) {
                if (n % i == 0) {
                    ds.push_back(i);
                    if (i * i != n) ds.push_back(n / i);
                }
            }
            return ds;
        };
        std::set<Rat> seen;
        std::vector<std::pair<Rat, int>> found;
        for (const auto& p : divisors(ic[0])) {
            for (const auto& q : divisors(ic[*d])) {
                for (int s : {1, -1}) {
                    Rat cand(mpq_class(s * p, q));
                    if (seen.count(cand)) continue;
                    seen.insert(cand);
                    if (!cur.eval(cand).is_zero()) continue;
                    int t = cur.root_multiplicity(cand, &cur);
                    found.emplace_back(cand, t);
                }
            }
        }
        out.insert(out.end(), found.begin(), found.end());
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (cofactor) *cofactor = cur;
    return out;
}

std::string SPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = grade(); i >= 0; --i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << coeffs_[i].str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<SPoly> hermite_basis(const std::vector<std::pair<Rat, int>>& nodes) {
    int total = 0;
    for (size_t j = 0; j < nodes.size(); ++j) {
        for (size_t t = j + 1; t < nodes.size(); ++t)
            if (nodes[j].first == nodes[t].first)
                throw std::invalid_argument("hermite_basis: duplicate nodes");
        if (nodes[j].second <= 0)
            throw std::invalid_argument("hermite_basis: nonpositive condition count");
        total += nodes[j].second;
    }
    // Confluent Vandermonde system: row per condition (node-major,
    // derivative-order-minor), column per power of z.
    RatMat A(total, total);
    int row = 0;
    for (const auto& [mu, l] : nodes) {
        for (int b = 0; b < l; ++b, ++row) {
            // d^b/dz^b z^c at mu = c(c-1)...(c-b+1) mu^{c-b}
            for (int c = b; c < total; ++c) {
                Rat fall(1);
                for (int t = 0; t < b; ++t) fall *= Rat(c - t);
                A.at(row, c) = fall * mu.pow(static_cast<unsigned>(c - b));
            }
        }
    }
    RatMat Ainv = A.inverse();
    std::vector<SPoly> out;
    out.reserve(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i) {
        std::vector<Rat> c(static_cast<size_t>(total));
        for (int p = 0; p < total; ++p) c[p] = Ainv.at(p, i);
        out.emplace_back(std::move(c));
    }
    return out;
}

Rat complete_homogeneous_deriv(int c, int a, int b, const Rat& mu) {
    if (c < 0 || a < 0 || b < 0)
        throw std::invalid_argument("complete_homogeneous_deriv: negative argument");
    if (a + b > c) return Rat(0);
    return binomial(c + 1, a + b + 1) * mu.pow(static_cast<unsigned>(c - a - b));
}

}  // namespace dlp
