#include "simul/rational.hpp"

#include <ostream>

namespace simul {

Rational::Rational(long n, long d) {
    if (d == 0) throw ParseError("denominator", "must be nonzero");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("rational", "empty string");
    // mpq accepts "p/q" directly but also whitespace and base prefixes we
    // do not want; validate the shape first.
    auto ok_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!ok_int(s)) throw ParseError("rational", "expected integer or p/q, got '" + s + "'");
    } else {
        auto p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!ok_int(p) || !ok_int(q))
            throw ParseError("rational", "expected integer or p/q, got '" + s + "'");
        if (mpz_class(q) == 0) throw ParseError("rational", "zero denominator in '" + s + "'");
    }
    mpq_class v(s);
    v.canonicalize();
    return Rational(std::move(v));
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    auto n = integer_sqrt_exact(num());
    if (!n) return std::nullopt;
    auto d = integer_sqrt_exact(den());
    if (!d) return std::nullopt;
    return Rational(mpq_class(*n, *d));
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

mpz_class Rational::round_half_up() const {
    // floor(x + 1/2)
    Rational shifted = *this + Rational(1, 2);
    return shifted.floor();
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

std::optional<mpz_class> integer_sqrt_exact(const mpz_class& z) {
    if (z < 0) return std::nullopt;
    if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

SquareFreeSplit square_free_split(mpz_class n) {
    if (n < 0) throw PreconditionViolation("square_free_split: negative radicand");
    SquareFreeSplit out{1, 1};
    if (n == 0) return SquareFreeSplit{1, 0};
    // Trial division. Radicands here come from discriminants of desk-scale
    // rationals, so their square factors are made of small primes.
    const unsigned long limit = 10000;
    auto strip = [&](unsigned long p) {
        mpz_class pp = mpz_class(p) * p;
        while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
            n /= pp;
            out.square_root *= p;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            out.free_part *= p;
        }
    };
    strip(2);
    strip(3);
    for (unsigned long p = 5; p <= limit && mpz_class(p) * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    // Whatever is left has no prime factor below the bound; fold it in if it
    // is a perfect square, otherwise treat it as square-free.
    if (auto r = integer_sqrt_exact(n)) {
        out.square_root *= *r;
    } else {
        out.free_part *= n;
    }
    return out;
}

} // namespace simul
