#include <stabkit/quadext.hpp>

#include <cmath>
#include <utility>

namespace stabkit {

namespace {

// Splits n > 0 as s^2 * f with f square-free (up to square factors of
// primes beyond the trial bound, which do not occur for the magnitudes
// handled here). Returns (s, f).
std::pair<Int, Int> extract_square(Int n) {
    Int s = 1;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return {r, Int(1)};
    }
    for (Int p = 2; p * p <= n && p < 100000; p = (p == 2 ? Int(3) : Int(p + 2))) {
        Int pp = p * p;
        while (n % pp == 0) {
            n /= pp;
            s *= p;
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return {s * r, Int(1)};
    }
    return {s, n};
}

}  // namespace

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(0), d_(0) {
    if (d.sign() < 0) throw std::domain_error("QuadExt: negative radicand");
    if (b.is_zero() || d.is_zero()) return;
    // b*sqrt(p/q) = (b/q)*sqrt(p*q); then pull the square part out of p*q.
    Int pq = d.num() * d.den();
    auto [s, f] = extract_square(pq);
    Rational coeff = b * Rational(s, d.den());
    if (f == 1) {
        a_ += coeff;
        return;
    }
    b_ = coeff;
    d_ = Rational(f);
    if (b_.is_zero()) d_ = Rational(0);
}

QuadExt QuadExt::sqrt(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("QuadExt: sqrt of negative rational");
    return QuadExt(Rational(0), Rational(1), x);
}

int QuadExt::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    if (a_.sign() == b_.sign()) return a_.sign();
    // a and b*sqrt(d) have opposite signs: compare a^2 against b^2 d.
    Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
    if (lhs == rhs) return 0;  // unreachable for square-free d >= 2
    return lhs > rhs ? a_.sign() : b_.sign();
}

namespace {

// Common radicand of two values, throwing when they generate distinct
// quadratic extensions.
Rational common_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational()) return x.radicand();
    if (x.radicand() != y.radicand())
        throw std::domain_error("QuadExt: incompatible radicands " + x.radicand().str() + " vs " +
                                y.radicand().str());
    return x.radicand();
}

}  // namespace

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    Rational d = common_radicand(x, y);
    return QuadExt(x.rat_a() + y.rat_a(), x.rat_b() + y.rat_b(), d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    // Pure surds multiply across extensions: b1 sqrt(d1) * b2 sqrt(d2).
    if (!x.is_rational() && !y.is_rational() && x.radicand() != y.radicand()) {
        if (x.rat_a().is_zero() && y.rat_a().is_zero())
            return QuadExt(Rational(0), x.rat_b() * y.rat_b(), x.radicand() * y.radicand());
    }
    Rational d = common_radicand(x, y);
    return QuadExt(x.rat_a() * y.rat_a() + x.rat_b() * y.rat_b() * d,
                   x.rat_a() * y.rat_b() + x.rat_b() * y.rat_a(), d);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
    if (y.is_rational())
        return QuadExt(x.rat_a() / y.rat_a(), x.rat_b() / y.rat_a(), x.radicand());
    // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2-b^2 d)
    Rational n = y.field_norm();
    return x * QuadExt(y.rat_a() / n, -y.rat_b() / n, y.radicand());
}

double QuadExt::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(d_.to_double());
}

std::string QuadExt::str() const {
    if (is_rational()) return a_.str();
    std::string surd = (b_ == Rational(1) ? "" : (b_ == Rational(-1) ? "-" : b_.str() + "*")) +
                       "sqrt(" + d_.str() + ")";
    if (a_.is_zero()) return surd;
    if (b_.sign() > 0) return a_.str() + "+" + surd;
    return a_.str() + surd;
}

}  // namespace stabkit
