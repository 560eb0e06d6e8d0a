#pragma once

#include <stabkit/rational.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace stabkit {

/// Truncated polynomial in the hyperplane class h with exact rational
/// coefficients; all terms of degree > dim are discarded.
class HSeries {
public:
    explicit HSeries(int dim) : dim_(dim), c_(dim + 1, Rational(0)) {
        if (dim < 0) throw std::invalid_argument("HSeries: negative truncation degree");
    }
    HSeries(int dim, std::vector<Rational> coeffs) : HSeries(dim) {
        if (static_cast<int>(coeffs.size()) > dim + 1)
            throw std::invalid_argument("HSeries: too many coefficients");
        for (size_t k = 0; k < coeffs.size(); ++k) c_[k] = coeffs[k];
    }

    static HSeries constant(const Rational& value, int dim) {
        HSeries s(dim);
        s.c_[0] = value;
        return s;
    }

    /// exp(t*h) truncated: sum_{k<=dim} t^k h^k / k!.
    static HSeries exponential(const Rational& t, int dim) {
        HSeries s(dim);
        Rational term(1);
        s.c_[0] = term;
        for (int k = 1; k <= dim; ++k) {
            term = term * t / Rational(k);
            s.c_[k] = term;
        }
        return s;
    }

    int dim() const { return dim_; }
    const Rational& operator[](int k) const { return c_.at(k); }
    Rational& operator[](int k) { return c_.at(k); }
    const std::vector<Rational>& coeffs() const { return c_; }

    HSeries operator-() const {
        HSeries r(dim_);
        for (int k = 0; k <= dim_; ++k) r.c_[k] = -c_[k];
        return r;
    }

    friend HSeries operator+(const HSeries& a, const HSeries& b) {
        check_dims(a, b);
        HSeries r(a.dim_);
        for (int k = 0; k <= a.dim_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend HSeries operator-(const HSeries& a, const HSeries& b) { return a + (-b); }

    friend HSeries operator*(const HSeries& a, const HSeries& b) {
        check_dims(a, b);
        HSeries r(a.dim_);
        for (int i = 0; i <= a.dim_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.dim_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend HSeries operator*(const Rational& s, const HSeries& a) {
        HSeries r(a.dim_);
        for (int k = 0; k <= a.dim_; ++k) r.c_[k] = s * a.c_[k];
        return r;
    }

    /// Multiplicative inverse up to truncation; constant term must be nonzero.
    HSeries inverse() const {
        if (c_[0].is_zero()) throw std::domain_error("HSeries: inverse of series with zero constant term");
        HSeries r(dim_);
        r.c_[0] = Rational(1) / c_[0];
        for (int k = 1; k <= dim_; ++k) {
            Rational acc(0);
            for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = -acc / c_[0];
        }
        return r;
    }

    friend HSeries operator/(const HSeries& a, const HSeries& b) { return a * b.inverse(); }

    HSeries pow(unsigned e) const {
        HSeries r = constant(Rational(1), dim_);
        HSeries base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    /// Re-truncates to a (smaller or larger) degree; new high coefficients are zero.
    HSeries truncated(int newdim) const {
        HSeries r(newdim);
        for (int k = 0; k <= std::min(dim_, newdim); ++k) r.c_[k] = c_[k];
        return r;
    }

    friend bool operator==(const HSeries& a, const HSeries& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }
    friend bool operator!=(const HSeries& a, const HSeries& b) { return !(a == b); }

    std::string str(const std::string& var = "h") const;

private:
    static void check_dims(const HSeries& a, const HSeries& b) {
        if (a.dim_ != b.dim_)
            throw std::invalid_argument("HSeries: truncation degrees differ (" +
                                        std::to_string(a.dim_) + " vs " + std::to_string(b.dim_) + ")");
    }

    int dim_;
    std::vector<Rational> c_;
};

inline HSeries hs_exp(const Rational& t, int dim) { return HSeries::exponential(t, dim); }

std::ostream& operator<<(std::ostream& os, const HSeries& s);

}  // namespace stabkit
