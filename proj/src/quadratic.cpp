#include "simul/quadratic.hpp"

#include <ostream>
#include <vector>

namespace simul {

Quad Quad::normalized(const Rational& a, const Rational& b, const Rational& d) {
    if (d.sign() < 0) throw PreconditionViolation("Quad::normalized: negative radicand");
    Quad q;
    q.a_ = a;
    if (b.is_zero() || d.is_zero()) return q;
    // sqrt(n/m) = sqrt(n*m)/m
    mpz_class n = d.num() * d.den();
    auto split = square_free_split(n);
    Rational coeff = b * Rational(split.square_root) / Rational(d.den());
    if (split.free_part <= 1) {
        q.a_ += coeff; // radicand collapsed; sqrt(1) = 1
        return q;
    }
    q.b_ = coeff;
    if (q.b_.is_zero()) return q;
    q.d_ = split.free_part;
    return q;
}

const Rational& Quad::as_rational() const {
    if (!is_rational()) throw Error("Quad::as_rational: value is irrational: " + str());
    return a_;
}

Quad Quad::conjugate() const {
    Quad q(*this);
    q.b_ = -q.b_;
    return q;
}

int Quad::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    int sa = a_.sign(), sb = b_.sign();
    if (sa == sb) return sa;
    // a and b*sqrt(d) pull in opposite directions; compare squares.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

Quad Quad::operator-() const {
    Quad q;
    q.a_ = -a_;
    q.b_ = -b_;
    q.d_ = d_;
    return q;
}

Quad& Quad::operator+=(const Quad& o) {
    if (b_.is_zero()) {
        a_ += o.a_;
        b_ = o.b_;
        d_ = o.d_;
        return *this;
    }
    if (o.b_.is_zero()) {
        a_ += o.a_;
        return *this;
    }
    if (d_ != o.d_)
        throw IncommensurableRadicands("cannot add sqrt(" + d_.get_str() + ") and sqrt(" + o.d_.get_str() + ") terms");
    a_ += o.a_;
    b_ += o.b_;
    if (b_.is_zero()) d_ = 0;
    return *this;
}

Quad& Quad::operator*=(const Quad& o) {
    if (b_.is_zero() || o.b_.is_zero()) {
        // one factor rational (or sharing no radical term)
        Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d_); // second term is 0 here
        Rational b = a_ * o.b_ + b_ * o.a_;
        mpz_class d = b_.is_zero() ? o.d_ : d_;
        a_ = a;
        b_ = b;
        d_ = b_.is_zero() ? mpz_class(0) : d;
        return *this;
    }
    if (d_ != o.d_)
        throw IncommensurableRadicands("cannot multiply sqrt(" + d_.get_str() + ") and sqrt(" + o.d_.get_str() + ") terms");
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d_);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    if (b_.is_zero()) d_ = 0;
    return *this;
}

Quad& Quad::operator/=(const Rational& r) {
    if (r.is_zero()) throw Error("Quad: division by zero");
    a_ /= r;
    b_ /= r;
    return *this;
}

std::string Quad::str() const {
    if (is_rational()) return a_.str();
    std::string s;
    if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? " + " : " - ");
    else if (b_.sign() < 0) s = "-";
    Rational babs = b_.abs();
    if (!(babs == Rational(1))) s += babs.str() + "*";
    s += "sqrt(" + d_.get_str() + ")";
    return s;
}

std::ostream& operator<<(std::ostream& os, const Quad& q) {
    return os << q.str();
}

namespace {

Order order_from_sign(int s) {
    return s < 0 ? Order::Less : s > 0 ? Order::Greater : Order::Equal;
}

// sign of A + (x - y) where x, y are pure radical terms b*sqrt(d) over
// distinct radicands and A is rational.
int mixed_radicand_sign(const Rational& A, const Rational& b1, const mpz_class& d1,
                        const Rational& b2, const mpz_class& d2) {
    // R = b1*sqrt(d1) - b2*sqrt(d2), both coefficients nonzero, d1 != d2.
    int s1 = b1.sign(), s2 = b2.sign();
    int sign_R;
    if (s1 != s2) {
        sign_R = s1;
    } else {
        Rational q1 = b1 * b1 * Rational(d1);
        Rational q2 = b2 * b2 * Rational(d2);
        // Equality is impossible: d2/d1 would be a square of a rational,
        // but both are square-free and distinct.
        sign_R = (q1 > q2) ? s1 : -s1;
    }
    if (A.is_zero()) return sign_R;
    int sign_A = A.sign();
    if (sign_A == sign_R) return sign_A;
    // |A| vs |R|: compare squares; R^2 lands in a single radicand.
    Rational A2 = A * A;
    Quad R2 = Quad::normalized(b1 * b1 * Rational(d1) + b2 * b2 * Rational(d2),
                               Rational(-2) * b1 * b2, Rational(d1 * d2));
    Quad diff = Quad(A2) - R2; // single radicand: fine
    int s = diff.sign();
    if (s == 0) return 0;
    return s > 0 ? sign_A : sign_R;
}

} // namespace

Order quad_compare(const Quad& x, const Quad& y) {
    const Rational A = x.rational_part() - y.rational_part();
    bool xr = x.is_rational(), yr = y.is_rational();
    if (xr && yr) return order_from_sign(A.sign());
    if (xr || yr || x.radicand() == y.radicand()) {
        // at most one radicand in play
        Quad diff = x - y;
        return order_from_sign(diff.sign());
    }
    return order_from_sign(mixed_radicand_sign(A, x.radical_coeff(), x.radicand(),
                                               y.radical_coeff(), y.radicand()));
}

Quad quad_polyval(const std::vector<Rational>& coeffs, const Quad& x) {
    Quad acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= x;
        acc += Quad(*it);
    }
    return acc;
}

} // namespace simul
