#ifndef SIMUL_GEOMETRY_HPP
#define SIMUL_GEOMETRY_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simul/quadratic.hpp"
#include "simul/rational.hpp"

namespace simul {

/// Displacement in Minkowski spacetime, signature (+,-,-,-), units c = 1.
struct FourVector {
    Rational dt, dx, dy, dz;

    FourVector() = default;
    FourVector(Rational t, Rational x, Rational y, Rational z)
        : dt(std::move(t)), dx(std::move(x)), dy(std::move(y)), dz(std::move(z)) {}

    const Rational& operator[](int i) const;
    Rational& operator[](int i);

    FourVector operator-() const { return {-dt, -dx, -dy, -dz}; }
    friend FourVector operator+(const FourVector& a, const FourVector& b) {
        return {a.dt + b.dt, a.dx + b.dx, a.dy + b.dy, a.dz + b.dz};
    }
    friend FourVector operator-(const FourVector& a, const FourVector& b) {
        return {a.dt - b.dt, a.dx - b.dx, a.dy - b.dy, a.dz - b.dz};
    }
    friend FourVector operator*(const Rational& s, const FourVector& v) {
        return {s * v.dt, s * v.dx, s * v.dy, s * v.dz};
    }
    friend bool operator==(const FourVector&, const FourVector&) = default;

    bool is_zero() const { return dt.is_zero() && dx.is_zero() && dy.is_zero() && dz.is_zero(); }
    std::string str() const;
};

/// Point of spacetime.
struct Event {
    Rational t, x, y, z;

    Event() = default;
    Event(Rational t_, Rational x_, Rational y_, Rational z_)
        : t(std::move(t_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    const Rational& operator[](int i) const;

    friend FourVector operator-(const Event& p, const Event& q) {
        return {p.t - q.t, p.x - q.x, p.y - q.y, p.z - q.z};
    }
    friend Event operator+(const Event& p, const FourVector& v) {
        return {p.t + v.dt, p.x + v.dx, p.y + v.dy, p.z + v.dz};
    }
    friend bool operator==(const Event&, const Event&) = default;
    std::string str() const;
};

/// Minkowski product, bilinear and symmetric.
Rational eta(const FourVector& u, const FourVector& v);
inline Rational eta2(const FourVector& u) { return eta(u, u); }

enum class Separation { Timelike, Lightlike, Spacelike, Coincident };

/// Classifies eta(p-q, p-q): positive Timelike, zero Lightlike (or
/// Coincident when p == q), negative Spacelike.
Separation separation(const Event& p, const Event& q);

/// Causal connectibility: eta(p-q,p-q) >= 0.
bool kappa(const Event& p, const Event& q);
/// Lightlike connectibility: eta(p-q,p-q) == 0.
bool lambda(const Event& p, const Event& q);
/// Causal order: kappa and q-p future-directed (p == q allowed).
bool precedes(const Event& p, const Event& q);

const char* separation_name(Separation s);

/// Orthonormal spatial triad adapted to a worldline: eta(e_i, e_j) = -delta_ij
/// and eta(e_i, direction) = 0. Needed only by frame-bound operations
/// (rotations about the worldline, Pythagorean sampling).
struct SpatialTriad {
    FourVector e1, e2, e3;
};

/// Inertial observer: a timelike straight line with a clock. The direction
/// must be future-directed (dt > 0) and its eta-norm a perfect rational
/// square, so proper time along the line is rational:
///   T(origin + s*direction) = s * clock_unit.
class Worldline {
public:
    Worldline(Event origin, FourVector direction);
    Worldline(Event origin, FourVector direction, SpatialTriad frame);

    static Worldline time_axis();

    const Event& origin() const { return origin_; }
    const FourVector& direction() const { return dir_; }
    const Rational& clock_unit() const { return clock_unit_; }

    /// Event at clock time tau.
    Event at_clock(const Rational& tau) const;
    /// Clock time of an event on the line; nullopt if the event is off it.
    std::optional<Rational> clock_of(const Event& p) const;
    bool contains(const Event& p) const { return clock_of(p).has_value(); }

    /// Same line, clock recentered so T(o) = 0. Throws PreconditionViolation
    /// if o is off the line.
    Worldline recentered(const Event& o) const;

    bool has_frame() const { return frame_.has_value(); }
    const SpatialTriad& frame() const;
    /// Deterministic search for a rational adapted triad; nullopt when the
    /// candidate ladder is exhausted.
    static std::optional<SpatialTriad> find_frame(const FourVector& direction);
    /// Ensures a frame is attached, searching if needed.
    Worldline with_frame() const;

private:
    Event origin_;
    FourVector dir_;
    Rational clock_unit_;
    std::optional<SpatialTriad> frame_;
};

/// Decomposes p - origin = s*direction + w with eta(direction, w) = 0.
/// Returns tau = s*clock_unit (clock time of the projection) and
/// r2 = -eta(w, w) >= 0 (squared spatial distance from the line).
struct AdaptedCoords {
    Rational tau;
    Rational r2;
};
AdaptedCoords adapted_time_radius2(const Worldline& w, const Event& p);

/// The orthogonal component w of p - origin (so p = origin + s*d + w).
FourVector orthogonal_part(const Worldline& w, const Event& p);

/// Event with coordinates in one quadratic extension (shared radicand).
struct QEvent {
    Quad t, x, y, z;

    QEvent() = default;
    QEvent(Quad t_, Quad x_, Quad y_, Quad z_);
    explicit QEvent(const Event& e) : t(e.t), x(e.x), y(e.y), z(e.z) {}

    /// Shared radicand (0 when all coordinates are rational).
    mpz_class radicand() const;
    bool is_rational() const;
    /// Rational event; throws if any coordinate is irrational.
    Event as_event() const;

    friend bool operator==(const QEvent&, const QEvent&) = default;
    std::string str() const;
};

/// Displacement with quadratic coordinates.
struct QVector {
    Quad dt, dx, dy, dz;
    QVector() = default;
    QVector(Quad t, Quad x, Quad y, Quad z)
        : dt(std::move(t)), dx(std::move(x)), dy(std::move(y)), dz(std::move(z)) {}
    explicit QVector(const FourVector& v) : dt(v.dt), dx(v.dx), dy(v.dy), dz(v.dz) {}
};

QVector operator-(const QEvent& p, const QEvent& q);
QVector operator-(const QEvent& p, const Event& q);
QEvent operator+(const QEvent& p, const QVector& v);
Quad eta(const QVector& u, const QVector& v);
inline Quad eta2(const QVector& u) { return eta(u, u); }

/// Exact 3x3 rational matrix acting on spatial components.
struct Mat3 {
    Rational m[3][3];

    static Mat3 identity();
    Mat3 transpose() const;
    bool is_special_orthogonal() const;

    friend Mat3 operator*(const Mat3& a, const Mat3& b);
    /// Rotates the spatial part, leaves dt alone.
    FourVector apply_spatial(const FourVector& v) const;
    friend bool operator==(const Mat3& a, const Mat3& b);
};

/// Cayley transform (I-S)^-1 (I+S) of the skew matrix of (a,b,c): an exact
/// rational rotation, det = +1. Total on all parameters.
Mat3 cayley_rotation(const Rational& a, const Rational& b, const Rational& c);

/// Deterministic search for a rational w with eta(w, u) = 0, eta(w, v) = 0
/// for every extra v, and -eta(w, w) = norm2 (norm2 > 0). Candidate ladder:
/// spatial axes, spatial axis pairs, then a small integer grid with the time
/// component solved from the u-orthogonality. Returns nullopt when the
/// ladder is exhausted (such a w need not exist over the rationals).
std::optional<FourVector> orthogonal_with_norm(const FourVector& u, const Rational& norm2,
                                               const std::vector<FourVector>& extra = {});

/// eta-dual of an ordered triple: orthogonal to a, b, c; for an orthonormal
/// (+1,-1,-1) triple the result is unit spacelike.
FourVector minkowski_dual(const FourVector& a, const FourVector& b, const FourVector& c);

std::ostream& operator<<(std::ostream& os, const Event& e);
std::ostream& operator<<(std::ostream& os, const FourVector& v);

} // namespace simul

#endif
