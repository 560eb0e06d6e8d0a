#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace stabkit {

using Int = mpz_class;

/// Arbitrary-precision rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : q_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    /// Accepts "n", "-n", "n/d" with optional sign; no whitespace.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(s));
            return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return q;
    }
    Int ceil() const {
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return q;
    }

    Rational pow(unsigned k) const {
        Rational r(1), base(*this);
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// Fixed-point decimal with `digits` fractional digits, rounded half
    /// away from zero. Exact integer arithmetic, so rendering is
    /// reproducible across platforms.
    std::string decimal(unsigned digits) const {
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
        Int n = num() * scale * 2 + (sign() >= 0 ? den() : -den());
        Int scaled = n / (den() * 2);  // truncation toward zero after the half-offset
        bool neg = scaled < 0;
        Int a = neg ? Int(-scaled) : scaled;
        Int ip = a / scale, fp = a % scale;
        std::string frac = fp.get_str();
        frac.insert(0, digits - frac.size(), '0');
        std::string out = (neg ? "-" : "") + ip.get_str();
        if (digits > 0) out += "." + frac;
        return out;
    }

    double to_double() const { return q_.get_d(); }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// binomial(n, k) for arbitrary integer n and k >= 0: n(n-1)...(n-k+1)/k!.
inline Rational binomial(const Rational& n, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= (n - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
    return r;
}

}  // namespace stabkit
