#pragma once

#include <stabkit/rational.hpp>

#include <stdexcept>
#include <string>

namespace stabkit {

/// Element a + b*sqrt(d) of a real quadratic extension of Q.
///
/// The radicand is canonicalised to a square-free positive integer (a
/// perfect-square radicand collapses to the rational a + b*sqrt(d) itself,
/// leaving b = 0, d = 0). Arithmetic mixing two distinct irrational
/// radicands is rejected; every surd needed here lives in a single
/// extension at a time.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(const Rational& a) : a_(a), b_(0), d_(0) {}
    QuadExt(int a) : a_(a), b_(0), d_(0) {}
    QuadExt(const Rational& a, const Rational& b, const Rational& d);

    static QuadExt sqrt(const Rational& x);

    const Rational& rat_a() const { return a_; }
    const Rational& rat_b() const { return b_; }
    const Rational& radicand() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }
    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("QuadExt: irrational value");
        return a_;
    }

    int sign() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_, nocheck{}); }
    QuadExt conj() const { return QuadExt(a_, -b_, d_, nocheck{}); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).is_zero(); }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    /// Norm a^2 - b^2 d of the extension.
    Rational field_norm() const { return a_ * a_ - b_ * b_ * d_; }

    double to_double() const;
    std::string str() const;

private:
    struct nocheck {};
    QuadExt(const Rational& a, const Rational& b, const Rational& d, nocheck)
        : a_(a), b_(b), d_(d) {}

    Rational a_, b_, d_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

}  // namespace stabkit
