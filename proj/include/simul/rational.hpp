#ifndef SIMUL_RATIONAL_HPP
#define SIMUL_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "simul/errors.hpp"

namespace simul {

/// Exact rational number. Always canonical: positive denominator,
/// gcd(|num|, den) = 1. This is the coordinate field of everything here.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    /// Parse "p", "-p", or "p/q". Throws ParseError on anything else.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// Exact square root if this is the square of a rational, else nullopt.
    std::optional<Rational> sqrt_exact() const;
    bool is_perfect_square() const { return sqrt_exact().has_value(); }

    /// Largest integer <= value / smallest integer >= value.
    mpz_class floor() const;
    mpz_class ceil() const;
    /// Nearest integer, halves rounded up.
    mpz_class round_half_up() const;

    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n*n == z for some integer n >= 0; returns n.
std::optional<mpz_class> integer_sqrt_exact(const mpz_class& z);

/// Splits n >= 0 as s^2 * f with f square-free (trial division up to a
/// desk-scale bound, then a perfect-square check on the cofactor).
struct SquareFreeSplit {
    mpz_class square_root; // s
    mpz_class free_part;   // f
};
SquareFreeSplit square_free_split(mpz_class n);

} // namespace simul

#endif
