#include <hdt/exact_scalar.hpp>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hdt {

namespace {

bool is_plain_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    };
    auto to_mpz = [&](std::string_view part) {
        if (!is_plain_integer(part)) fail();
        if (part[0] == '+') part.remove_prefix(1);  // GMP rejects a leading '+'
        return mpz_class(std::string(part));
    };
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(to_mpz(text));
    mpz_class n = to_mpz(text.substr(0, slash));
    mpz_class d = to_mpz(text.substr(slash + 1));
    if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(n, d);
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    Rational r;
    r.v_ = mpq_class(n, d);  // powers of a canonical form stay canonical
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    Rational a = a_ * o.a_ + Rational(2) * (b_ * o.b_);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
    // 1/(a + b*r2) = (a - b*r2) / (a^2 - 2 b^2); the norm is nonzero for
    // nonzero operands because sqrt(2) is irrational.
    Rational norm = o.a_ * o.a_ - Rational(2) * (o.b_ * o.b_);
    ExactScalar conj(o.a_ / norm, -o.b_ / norm);
    return *this *= conj;
}

int ExactScalar::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Signs disagree: compare a^2 with 2 b^2. Equality cannot happen with
    // both parts nonzero, but the comparison is exact either way.
    Rational diff = a_ * a_ - Rational(2) * (b_ * b_);
    int c = diff.sign();
    return sa > 0 ? c : -c;
}

ExactScalar ExactScalar::pow(unsigned e) const {
    ExactScalar result(1);
    ExactScalar base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

ExactScalar ExactScalar::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("ExactScalar: cannot parse '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    if (text.find('.') != std::string_view::npos) fail();  // no decimal literals

    // Split at the sign that separates the rational and the sqrt(2) parts.
    // A leading sign belongs to the first rational.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] == '+' || text[i] == '-') {
            if (text[i - 1] == '/') fail();
            split = i;
            break;
        }
    }
    std::string_view head = (split == std::string_view::npos) ? text : text.substr(0, split);
    std::string_view tail = (split == std::string_view::npos) ? std::string_view{} : text.substr(split);

    auto parse_radical_coeff = [&](std::string_view part) -> Rational {
        // part is [+-]coeff*r2 or [+-]r2
        int s = 1;
        if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
            s = part[0] == '-' ? -1 : 1;
            part.remove_prefix(1);
        }
        if (part == "r2") return Rational(s);
        std::size_t star = part.rfind("*r2");
        if (star == std::string_view::npos || star + 3 != part.size()) fail();
        Rational c = Rational::parse(part.substr(0, star));
        return s < 0 ? -c : c;
    };

    bool head_is_radical = head.size() >= 2 && head.substr(head.size() - 2) == "r2";
    if (head_is_radical) {
        if (!tail.empty()) fail();
        return ExactScalar(Rational(0), parse_radical_coeff(head));
    }
    Rational a = Rational::parse(head);
    if (tail.empty()) return ExactScalar(std::move(a));
    return ExactScalar(std::move(a), parse_radical_coeff(tail));
}

std::string ExactScalar::str() const {
    if (b_.is_zero()) return a_.str();
    std::string out = a_.str();
    out += b_.sign() < 0 ? '-' : '+';
    out += b_.abs().str();
    out += "*r2";
    return out;
}

double ExactScalar::approx() const {
    return a_.approx() + b_.approx() * std::sqrt(2.0);
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

int radical_sign(const RadicalExpr& e) {
    int sk = e.k.sign();
    if (sk < 0) throw std::domain_error("radical_sign: negative radicand");
    if (sk == 0 || e.v.is_zero()) return e.u.sign();
    int su = e.u.sign();
    int sv = e.v.sign();
    if (su == 0) return sv;
    if (su == sv) return su;
    // Opposite signs: |u| vs |v|*sqrt(k), squared.
    int c = (e.u * e.u - e.v * e.v * e.k).sign();
    return su > 0 ? c : -c;
}

Rational rational_upper_bound(const ExactScalar& s) {
    const Rational& b = s.sqrt2_part();
    if (b.sign() >= 0) return s.rational_part() + Rational(2) * b;
    return s.rational_part();
}

}  // namespace hdt
