#ifndef DLP_SPOLY_HPP
#define DLP_SPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlp/rat.hpp"

namespace dlp {

/// Scalar polynomial in z with an explicit grade (grade >= degree).
/// coeffs[i] is the coefficient of z^i; length is always grade+1, trailing
/// zeros permitted. degree() is empty for the zero polynomial.
class SPoly {
public:
    SPoly() : coeffs_(1, Rat(0)) {}  // zero polynomial, grade 0
    explicit SPoly(std::vector<Rat> coeffs);
    SPoly(std::vector<Rat> coeffs, int grade);

    static SPoly zero(int grade = 0);
    static SPoly constant(const Rat& c, int grade = 0);
    /// z^power, grade = power.
    static SPoly monomial(int power, const Rat& c = Rat(1));
    /// z - root, grade 1.
    static SPoly linear_root(const Rat& root);

    int grade() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::optional<int> degree() const;
    bool is_zero() const { return !degree().has_value(); }
    const Rat& coeff(int i) const;  // 0 beyond grade
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat leading_coeff() const;  // coefficient at degree(); throws on zero poly

    /// Multiplicity of infinity as a root: grade - degree. Throws on zero poly.
    int inf_root_multiplicity() const;

    SPoly with_grade(int g) const;  // requires g >= degree

    SPoly operator-() const;
    friend SPoly operator+(const SPoly& a, const SPoly& b);
    friend SPoly operator-(const SPoly& a, const SPoly& b);
    friend SPoly operator*(const SPoly& a, const SPoly& b);
    friend SPoly operator*(const Rat& c, const SPoly& a);
    friend bool operator==(const SPoly& a, const SPoly& b);  // equality of coefficients (grades may differ)
    friend bool operator!=(const SPoly& a, const SPoly& b) { return !(a == b); }

    /// Quotient and remainder with deg(rem) < deg(b). Throws if b == 0.
    static std::pair<SPoly, SPoly> divrem(const SPoly& a, const SPoly& b);
    /// Exact division; throws if the remainder is nonzero.
    static SPoly div_exact(const SPoly& a, const SPoly& b);

    /// Monic gcd over Q[z]; throws if both inputs are zero.
    static SPoly gcd(const SPoly& a, const SPoly& b);

    /// order-th derivative; normalized divides by order!. Grade drops by order
    /// (floored at 0).
    SPoly derivative(int order = 1, bool normalized = false) const;

    Rat eval(const Rat& z) const;

    /// z^k a(1/z) with respect to grade k = wrt_grade; requires wrt_grade >= degree.
    SPoly reversal(int wrt_grade) const;

    SPoly monic() const;  // throws on zero poly

    /// Largest t with (z - root)^t dividing *this; the quotient by (z-root)^t
    /// is returned through quotient if non-null. Zero polynomial -> throws.
    int root_multiplicity(const Rat& root, SPoly* quotient = nullptr) const;

    /// All rational roots with multiplicities, sorted by value; remaining
    /// (root-free over Q) cofactor returned via cofactor if non-null.
    std::vector<std::pair<Rat, int>> rational_roots(SPoly* cofactor = nullptr) const;

    std::string str() const;

private:
    std::vector<Rat> coeffs_;
};

/// Hermite interpolation basis for nodes (mu_j, l_j): returns T = sum l_j
/// polynomials of degree <= T-1, node-major then derivative-order, with
/// H_i^(b)(mu_t) = 1 exactly at (t,b) = (j,a) and 0 at all other conditions.
std::vector<SPoly> hermite_basis(const std::vector<std::pair<Rat, int>>& nodes);

/// Normalized mixed partial (1/a!)(1/b!) d^a_x d^b_y of the c-th complete
/// homogeneous polynomial h_c(x,y) = sum_{h=0}^{c} x^{c-h} y^h at x = y = mu.
Rat complete_homogeneous_deriv(int c, int a, int b, const Rat& mu);

}  // namespace dlp

#endif
