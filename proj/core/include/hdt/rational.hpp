#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hdt {

/// Arbitrary-precision rational in canonical form: denominator > 0,
/// gcd(|num|, den) = 1. Thin value wrapper around GMP's mpq_class.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { require_nonzero_den(); v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        require_nonzero_den();
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { require_nonzero_den(); v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". No decimal literals.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(from_raw{}, ::abs(v_)); }
    Rational pow(unsigned e) const;

    Rational operator-() const { return Rational(from_raw{}, -v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    /// Nearest double; for display and benchmark fitting only, never for
    /// geometric decisions.
    double approx() const { return v_.get_d(); }

private:
    struct from_raw {};
    Rational(from_raw, mpq_class q) : v_(std::move(q)) {}
    void require_nonzero_den() {
        if (sgn(v_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
    }

    mpq_class v_;
};

}  // namespace hdt
