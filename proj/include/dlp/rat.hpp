#ifndef DLP_RAT_HPP
#define DLP_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dlp {

/// Exact rational scalar. Always stored in lowest terms, denominator > 0.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p/q" or "p".
    static Rat from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rat(Raw{}, q);
    }

    std::string str() const { return v_.get_str(); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat operator-() const { return Rat(Raw{}, -v_); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(Raw{}, 1 / v_);
    }

    Rat pow(unsigned e) const {
        mpq_class r(1);
        mpq_class base = v_;
        for (unsigned b = e; b; b >>= 1) {
            if (b & 1) r *= base;
            if (b > 1) base *= base;
        }
        return Rat(Raw{}, r);
    }

    const mpq_class& raw() const { return v_; }

private:
    struct Raw {};
    Rat(Raw, mpq_class q) : v_(std::move(q)) {}  // already canonical
    mpq_class v_;
};

/// binomial(n, k) as an exact integer-valued Rat; 0 when k > n or k < 0.
inline Rat binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rat(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(mpq_class(r));
}

inline Rat factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(mpq_class(r));
}

}  // namespace dlp

#endif
