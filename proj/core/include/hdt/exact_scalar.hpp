#pragma once

#include <hdt/rational.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace hdt {

/// Element of the quadratic field Q[sqrt(2)], stored as a + b*sqrt(2) with
/// rational a, b. The representation is unique (sqrt(2) is irrational), so
/// the value is zero iff a = b = 0 and all comparisons are exact.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long n) : a_(n) {}
    ExactScalar(Rational a) : a_(std::move(a)) {}
    ExactScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static ExactScalar sqrt2() { return ExactScalar(Rational(0), Rational(1)); }

    /// Parses the text encoding: "p/q", "p", "p/q+r/s*r2", "p/q-r/s*r2"
    /// (integer parts may omit "/q"). No decimal literals.
    static ExactScalar parse(std::string_view text);

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// Exact sign in {-1, 0, +1}.
    int sign() const;

    ExactScalar abs() const { return sign() < 0 ? -*this : *this; }
    ExactScalar pow(unsigned e) const;

    ExactScalar operator-() const { return ExactScalar(-a_, -b_); }
    ExactScalar& operator+=(const ExactScalar& o) { a_ += o.a_; b_ += o.b_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }
    friend bool operator<(const ExactScalar& x, const ExactScalar& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const ExactScalar& x, const ExactScalar& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const ExactScalar& x, const ExactScalar& y) { return (x - y).sign() > 0; }
    friend bool operator>=(const ExactScalar& x, const ExactScalar& y) { return (x - y).sign() >= 0; }

    /// Canonical text form, e.g. "3/4", "-2", "3/4+1/2*r2", "0-1*r2".
    std::string str() const;
    double approx() const;

private:
    Rational a_;
    Rational b_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

/// Symbolic u + v*sqrt(k) with u, v, k in Q[sqrt(2)] and k >= 0. One radical
/// layer only; never nested.
struct RadicalExpr {
    ExactScalar u;
    ExactScalar v;
    ExactScalar k;
};

/// Exact sign of u + v*sqrt(k) by case analysis on the signs of u, v and a
/// comparison of u^2 against v^2*k. Throws std::domain_error if k < 0.
int radical_sign(const RadicalExpr& e);

/// A rational upper bound for a nonnegative scalar (uses sqrt(2) < 2).
Rational rational_upper_bound(const ExactScalar& s);

}  // namespace hdt
