#ifndef SIMUL_QUADRATIC_HPP
#define SIMUL_QUADRATIC_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "simul/rational.hpp"

namespace simul {

enum class Order { Less, Equal, Greater };

/// Number of the form a + b*sqrt(d), held in normal form:
///   d is a square-free non-negative integer, and b == 0 implies d == 0.
/// Values with matching radicands (or a rational operand) form a field;
/// mixing two distinct irrational radicands in + or * throws
/// IncommensurableRadicands. Comparison works across radicands.
class Quad {
public:
    Quad() = default;
    Quad(Rational a) : a_(std::move(a)) {}
    Quad(int a) : a_(a) {}

    /// Normal form of a + b*sqrt(d) for any non-negative rational d.
    /// A rational d = n/m is rewritten via sqrt(n/m) = sqrt(nm)/m, square
    /// factors fold into b, and a radicand of 1 collapses to a rational.
    static Quad normalized(const Rational& a, const Rational& b, const Rational& d);

    /// sqrt(r) for rational r >= 0.
    static Quad sqrt(const Rational& r) { return normalized(0, 1, r); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    const mpz_class& radicand() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    /// Rational value; throws unless is_rational().
    const Rational& as_rational() const;

    /// Galois conjugate a - b*sqrt(d).
    Quad conjugate() const;

    int sign() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    Quad operator-() const;
    Quad& operator+=(const Quad& o);
    Quad& operator-=(const Quad& o) { return *this += -o; }
    Quad& operator*=(const Quad& o);
    /// Division by a nonzero rational only.
    Quad& operator/=(const Rational& r);

    friend Quad operator+(Quad x, const Quad& y) { return x += y; }
    friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
    friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
    friend Quad operator/(Quad x, const Rational& r) { return x /= r; }

    friend bool operator==(const Quad& x, const Quad& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }

    std::string str() const;

private:
    Rational a_;
    Rational b_;
    mpz_class d_ = 0;
};

/// Exact real-number ordering, decided by rational sign analysis; handles
/// distinct radicands.
Order quad_compare(const Quad& x, const Quad& y);

inline bool quad_less(const Quad& x, const Quad& y) { return quad_compare(x, y) == Order::Less; }

std::ostream& operator<<(std::ostream& os, const Quad& q);

/// Evaluates a polynomial (coefficients by ascending degree) at x; stays in
/// the field of x.
Quad quad_polyval(const std::vector<Rational>& coeffs, const Quad& x);

} // namespace simul

#endif
