#include "simul/geometry.hpp"

#include <ostream>

#include "simul/errors.hpp"

namespace simul {

const Rational& FourVector::operator[](int i) const {
    switch (i) {
        case 0: return dt;
        case 1: return dx;
        case 2: return dy;
        default: return dz;
    }
}

Rational& FourVector::operator[](int i) {
    switch (i) {
        case 0: return dt;
        case 1: return dx;
        case 2: return dy;
        default: return dz;
    }
}

const Rational& Event::operator[](int i) const {
    switch (i) {
        case 0: return t;
        case 1: return x;
        case 2: return y;
        default: return z;
    }
}

std::string FourVector::str() const {
    return "(" + dt.str() + ", " + dx.str() + ", " + dy.str() + ", " + dz.str() + ")";
}

std::string Event::str() const {
    return "(" + t.str() + ", " + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

Rational eta(const FourVector& u, const FourVector& v) {
    return u.dt * v.dt - u.dx * v.dx - u.dy * v.dy - u.dz * v.dz;
}

Separation separation(const Event& p, const Event& q) {
    if (p == q) return Separation::Coincident;
    int s = eta2(p - q).sign();
    if (s > 0) return Separation::Timelike;
    if (s < 0) return Separation::Spacelike;
    return Separation::Lightlike;
}

bool kappa(const Event& p, const Event& q) {
    return eta2(p - q).sign() >= 0;
}

bool lambda(const Event& p, const Event& q) {
    return eta2(p - q).is_zero();
}

bool precedes(const Event& p, const Event& q) {
    if (p == q) return true;
    FourVector d = q - p;
    return eta2(d).sign() >= 0 && d.dt.sign() > 0;
}

const char* separation_name(Separation s) {
    switch (s) {
        case Separation::Timelike: return "timelike";
        case Separation::Lightlike: return "lightlike";
        case Separation::Spacelike: return "spacelike";
        default: return "coincident";
    }
}

Worldline::Worldline(Event origin, FourVector direction)
    : origin_(std::move(origin)), dir_(std::move(direction)) {
    Rational norm2 = eta2(dir_);
    if (norm2.sign() <= 0)
        throw PreconditionViolation("Worldline: direction must be timelike");
    if (dir_.dt.sign() <= 0)
        throw PreconditionViolation("Worldline: direction must be future-directed (dt > 0)");
    auto root = norm2.sqrt_exact();
    if (!root)
        throw PreconditionViolation("Worldline: eta(direction,direction) = " + norm2.str() +
                                    " is not a perfect rational square");
    clock_unit_ = *root;
}

Worldline::Worldline(Event origin, FourVector direction, SpatialTriad frame)
    : Worldline(std::move(origin), std::move(direction)) {
    for (const FourVector* e : {&frame.e1, &frame.e2, &frame.e3}) {
        if (!eta(*e, dir_).is_zero() || !(eta2(*e) == Rational(-1)))
            throw PreconditionViolation("Worldline: frame vector not unit-spatial-orthogonal");
    }
    if (!eta(frame.e1, frame.e2).is_zero() || !eta(frame.e1, frame.e3).is_zero() ||
        !eta(frame.e2, frame.e3).is_zero())
        throw PreconditionViolation("Worldline: frame vectors not mutually orthogonal");
    frame_ = std::move(frame);
}

Worldline Worldline::time_axis() {
    return Worldline(Event{0, 0, 0, 0}, FourVector{1, 0, 0, 0},
                     SpatialTriad{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

Event Worldline::at_clock(const Rational& tau) const {
    return origin_ + (tau / clock_unit_) * dir_;
}

std::optional<Rational> Worldline::clock_of(const Event& p) const {
    FourVector d = p - origin_;
    // d must be a rational multiple of dir_
    Rational s;
    bool found = false;
    for (int i = 0; i < 4; ++i) {
        if (!dir_[i].is_zero()) {
            s = d[i] / dir_[i];
            found = true;
            break;
        }
    }
    if (!found) return std::nullopt;
    for (int i = 0; i < 4; ++i)
        if (!(d[i] == s * dir_[i])) return std::nullopt;
    return s * clock_unit_;
}

Worldline Worldline::recentered(const Event& o) const {
    if (!contains(o))
        throw PreconditionViolation("Worldline::recentered: event off the line");
    Worldline w(*this);
    w.origin_ = o;
    return w;
}

const SpatialTriad& Worldline::frame() const {
    if (!frame_) throw PreconditionViolation("Worldline: no adapted frame attached");
    return *frame_;
}

Worldline Worldline::with_frame() const {
    if (frame_) return *this;
    auto f = find_frame(dir_);
    if (!f)
        throw PreconditionViolation("Worldline: no rational adapted frame found for direction " + dir_.str());
    return Worldline(origin_, dir_, *f);
}

AdaptedCoords adapted_time_radius2(const Worldline& w, const Event& p) {
    FourVector delta = p - w.origin();
    Rational s = eta(delta, w.direction()) / eta2(w.direction());
    FourVector ortho = delta - s * w.direction();
    return {s * w.clock_unit(), -eta2(ortho)};
}

FourVector orthogonal_part(const Worldline& w, const Event& p) {
    FourVector delta = p - w.origin();
    Rational s = eta(delta, w.direction()) / eta2(w.direction());
    return delta - s * w.direction();
}

namespace {

// Joins radicands: all coordinates must live in one quadratic extension.
void check_shared_radicand(const Quad* coords[4]) {
    mpz_class d = 0;
    for (int i = 0; i < 4; ++i) {
        if (coords[i]->is_rational()) continue;
        if (d == 0) d = coords[i]->radicand();
        else if (d != coords[i]->radicand())
            throw IncommensurableRadicands("QEvent coordinates mix radicands " + d.get_str() +
                                           " and " + coords[i]->radicand().get_str());
    }
}

} // namespace

QEvent::QEvent(Quad t_, Quad x_, Quad y_, Quad z_)
    : t(std::move(t_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
    const Quad* coords[4] = {&t, &x, &y, &z};
    check_shared_radicand(coords);
}

mpz_class QEvent::radicand() const {
    for (const Quad* q : {&t, &x, &y, &z})
        if (!q->is_rational()) return q->radicand();
    return 0;
}

bool QEvent::is_rational() const {
    return radicand() == 0;
}

Event QEvent::as_event() const {
    return Event{t.as_rational(), x.as_rational(), y.as_rational(), z.as_rational()};
}

std::string QEvent::str() const {
    return "(" + t.str() + ", " + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

QVector operator-(const QEvent& p, const QEvent& q) {
    return {p.t - q.t, p.x - q.x, p.y - q.y, p.z - q.z};
}

QVector operator-(const QEvent& p, const Event& q) {
    return {p.t - Quad(q.t), p.x - Quad(q.x), p.y - Quad(q.y), p.z - Quad(q.z)};
}

QEvent operator+(const QEvent& p, const QVector& v) {
    return {p.t + v.dt, p.x + v.dx, p.y + v.dy, p.z + v.dz};
}

Quad eta(const QVector& u, const QVector& v) {
    return u.dt * v.dt - u.dx * v.dx - u.dy * v.dy - u.dz * v.dz;
}

Mat3 Mat3::identity() {
    Mat3 r{};
    for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
    return r;
}

Mat3 Mat3::transpose() const {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r.m[i][j] += a.m[i][k] * b.m[k][j];
    return r;
}

bool operator==(const Mat3& a, const Mat3& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!(a.m[i][j] == b.m[i][j])) return false;
    return true;
}

FourVector Mat3::apply_spatial(const FourVector& v) const {
    return FourVector{v.dt,
                      m[0][0] * v.dx + m[0][1] * v.dy + m[0][2] * v.dz,
                      m[1][0] * v.dx + m[1][1] * v.dy + m[1][2] * v.dz,
                      m[2][0] * v.dx + m[2][1] * v.dy + m[2][2] * v.dz};
}

bool Mat3::is_special_orthogonal() const {
    Mat3 prod = *this * transpose();
    if (!(prod == identity())) return false;
    Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return det == Rational(1);
}

Mat3 cayley_rotation(const Rational& a, const Rational& b, const Rational& c) {
    // S = skew(a,b,c); R = (I-S)^-1 (I+S). det(I-S) = 1 + a^2 + b^2 + c^2 > 0.
    Mat3 s{};
    s.m[0][1] = -c; s.m[0][2] = b;
    s.m[1][0] = c;  s.m[1][2] = -a;
    s.m[2][0] = -b; s.m[2][1] = a;
    Mat3 i_minus{}, i_plus{};
    for (int r = 0; r < 3; ++r)
        for (int cc = 0; cc < 3; ++cc) {
            Rational diag = (r == cc) ? Rational(1) : Rational(0);
            i_minus.m[r][cc] = diag - s.m[r][cc];
            i_plus.m[r][cc] = diag + s.m[r][cc];
        }
    // invert i_minus via adjugate
    const auto& M = i_minus.m;
    Rational det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                   M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                   M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    Mat3 inv{};
    inv.m[0][0] = (M[1][1] * M[2][2] - M[1][2] * M[2][1]) / det;
    inv.m[0][1] = (M[0][2] * M[2][1] - M[0][1] * M[2][2]) / det;
    inv.m[0][2] = (M[0][1] * M[1][2] - M[0][2] * M[1][1]) / det;
    inv.m[1][0] = (M[1][2] * M[2][0] - M[1][0] * M[2][2]) / det;
    inv.m[1][1] = (M[0][0] * M[2][2] - M[0][2] * M[2][0]) / det;
    inv.m[1][2] = (M[0][2] * M[1][0] - M[0][0] * M[1][2]) / det;
    inv.m[2][0] = (M[1][0] * M[2][1] - M[1][1] * M[2][0]) / det;
    inv.m[2][1] = (M[0][1] * M[2][0] - M[0][0] * M[2][1]) / det;
    inv.m[2][2] = (M[0][0] * M[1][1] - M[0][1] * M[1][0]) / det;
    return inv * i_plus;
}

namespace {

bool satisfies_extra(const FourVector& w, const std::vector<FourVector>& extra) {
    for (const auto& v : extra)
        if (!eta(w, v).is_zero()) return false;
    return true;
}

// Scales candidate w0 so that -eta(w,w) hits norm2 exactly; requires the
// ratio to be a perfect rational square.
std::optional<FourVector> scale_to_norm(const FourVector& w0, const Rational& norm2) {
    Rational have = -eta2(w0);
    if (have.sign() <= 0) return std::nullopt;
    auto s = (norm2 / have).sqrt_exact();
    if (!s) return std::nullopt;
    return *s * w0;
}

} // namespace

std::optional<FourVector> orthogonal_with_norm(const FourVector& u, const Rational& norm2,
                                               const std::vector<FourVector>& extra) {
    if (norm2.sign() <= 0) return std::nullopt;
    // spatial axes
    for (int i = 1; i < 4; ++i) {
        FourVector w0;
        w0[i] = 1;
        if (!eta(w0, u).is_zero() || !satisfies_extra(w0, extra)) continue;
        if (auto w = scale_to_norm(w0, norm2)) return w;
    }
    // spatial axis pairs: (u_j, -u_i) in slots (i, j) is u-orthogonal by
    // construction whenever u has no time leak into those slots; check anyway.
    for (int i = 1; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            FourVector w0;
            w0[i] = u[j];
            w0[j] = -u[i];
            if (w0.is_zero() || !eta(w0, u).is_zero() || !satisfies_extra(w0, extra)) continue;
            if (auto w = scale_to_norm(w0, norm2)) return w;
        }
    }
    // small integer grid over spatial components, time solved from
    // eta(w, u) = 0.
    const long L = 6;
    for (long c1 = -L; c1 <= L; ++c1) {
        for (long c2 = -L; c2 <= L; ++c2) {
            for (long c3 = -L; c3 <= L; ++c3) {
                if (c1 == 0 && c2 == 0 && c3 == 0) continue;
                FourVector w0{0, Rational(c1), Rational(c2), Rational(c3)};
                Rational spatial_dot = w0.dx * u.dx + w0.dy * u.dy + w0.dz * u.dz;
                if (u.dt.is_zero()) {
                    if (!spatial_dot.is_zero()) continue;
                } else {
                    w0.dt = spatial_dot / u.dt;
                }
                if (!satisfies_extra(w0, extra)) continue;
                if (auto w = scale_to_norm(w0, norm2)) return w;
            }
        }
    }
    return std::nullopt;
}

FourVector minkowski_dual(const FourVector& a, const FourVector& b, const FourVector& c) {
    auto det3 = [](const Rational& a1, const Rational& a2, const Rational& a3,
                   const Rational& b1, const Rational& b2, const Rational& b3,
                   const Rational& c1, const Rational& c2, const Rational& c3) {
        return a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1) + a3 * (b1 * c2 - b2 * c1);
    };
    // covector m_mu = eps_{mu nu rho sigma} a^nu b^rho c^sigma, eps_0123 = +1
    Rational m0 = det3(a.dx, a.dy, a.dz, b.dx, b.dy, b.dz, c.dx, c.dy, c.dz);
    Rational m1 = -det3(a.dt, a.dy, a.dz, b.dt, b.dy, b.dz, c.dt, c.dy, c.dz);
    Rational m2 = det3(a.dt, a.dx, a.dz, b.dt, b.dx, b.dz, c.dt, c.dx, c.dz);
    Rational m3 = -det3(a.dt, a.dx, a.dy, b.dt, b.dx, b.dy, c.dt, c.dx, c.dy);
    // raise the index: (+,-,-,-)
    return FourVector{m0, -m1, -m2, -m3};
}

std::optional<SpatialTriad> Worldline::find_frame(const FourVector& direction) {
    Rational norm2 = eta2(direction);
    auto cu = norm2.sqrt_exact();
    if (!cu || direction.dt.sign() <= 0) return std::nullopt;
    auto e1 = orthogonal_with_norm(direction, 1);
    if (!e1) return std::nullopt;
    auto e2 = orthogonal_with_norm(direction, 1, {*e1});
    if (!e2) return std::nullopt;
    FourVector unit_dir = (Rational(1) / *cu) * direction;
    FourVector e3 = minkowski_dual(unit_dir, *e1, *e2);
    if (!(eta2(e3) == Rational(-1))) return std::nullopt;
    // fix spatial orientation: det[unit_dir e1 e2 e3] = +1, matching the
    // standard frame (t,x,y,z) -> e3 = +z.
    FourVector cols[4] = {unit_dir, *e1, *e2, e3};
    auto det4 = [&]() {
        // Laplace along the first row, exact rationals.
        auto minor3 = [&](int skip_col) {
            Rational m[3][3];
            for (int r = 1; r < 4; ++r) {
                int cc = 0;
                for (int c = 0; c < 4; ++c) {
                    if (c == skip_col) continue;
                    m[r - 1][cc++] = cols[c][r];
                }
            }
            return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        };
        Rational d;
        int sign = 1;
        for (int c = 0; c < 4; ++c) {
            if (!cols[c][0].is_zero())
                d += Rational(sign) * cols[c][0] * minor3(c);
            sign = -sign;
        }
        return d;
    };
    if (det4().sign() < 0) e3 = -e3;
    return SpatialTriad{*e1, *e2, e3};
}

std::ostream& operator<<(std::ostream& os, const Event& e) { return os << e.str(); }
std::ostream& operator<<(std::ostream& os, const FourVector& v) { return os << v.str(); }

} // namespace simul
