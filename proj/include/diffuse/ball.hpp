#pragma once

// Midpoint-radius interval arithmetic on doubles. Every operation returns an
// enclosure of the exact result; rounding slop is absorbed by inflate().
// Comparisons come in "certain" form: true only if the whole enclosures agree.

#include "diffuse/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace diffuse {

struct UndecidedError : std::runtime_error {
    explicit UndecidedError(const std::string& what) : std::runtime_error(what) {}
};

struct RBall {
    double mid = 0.0;
    double rad = 0.0;

    RBall() = default;
    RBall(double m, double r) : mid(m), rad(r) {}
    explicit RBall(double m) : mid(m), rad(0.0) {}

    double lo() const { return mid - rad; }
    double hi() const { return mid + rad; }

    bool certainly_positive() const { return lo() > 0.0; }
    bool certainly_negative() const { return hi() < 0.0; }
    bool certainly_lt(const RBall& o) const { return hi() < o.lo(); }
    bool certainly_le(const RBall& o) const { return hi() <= o.lo(); }
    bool contains_zero() const { return lo() <= 0.0 && hi() >= 0.0; }
};

// One ulp-scale bump plus an underflow guard; 1e-15 > 4*2^-53 covers a few
// roundings per operation, libm calls included (glibc is sub-ulp for these).
inline double inflate(double mid, double rad) {
    return rad + (std::fabs(mid) + rad) * 1e-15 + 1e-300;
}

inline RBall rball_exact(double v) { return RBall(v, 0.0); }

/// Enclosure of a rational. Radius 0 when the double conversion is exact.
inline RBall rball_from(const Rational& q) {
    double m = to_double(q);
    if (std::isfinite(m) && Rational(m) == q) return RBall(m, 0.0);
    return RBall(m, inflate(m, std::fabs(m) * 4e-16));
}

inline RBall operator-(const RBall& a) { return RBall(-a.mid, a.rad); }

inline RBall operator+(const RBall& a, const RBall& b) {
    double m = a.mid + b.mid;
    return RBall(m, inflate(m, a.rad + b.rad));
}

inline RBall operator-(const RBall& a, const RBall& b) {
    double m = a.mid - b.mid;
    return RBall(m, inflate(m, a.rad + b.rad));
}

inline RBall operator*(const RBall& a, const RBall& b) {
    double m = a.mid * b.mid;
    double r = std::fabs(a.mid) * b.rad + std::fabs(b.mid) * a.rad + a.rad * b.rad;
    return RBall(m, inflate(m, r));
}

inline RBall operator/(const RBall& a, const RBall& b) {
    double bl = std::fabs(b.mid) - b.rad;
    if (bl <= 0.0) throw UndecidedError("ball division by interval containing zero");
    double m = a.mid / b.mid;
    double r = (std::fabs(a.mid) * b.rad + std::fabs(b.mid) * a.rad) / (std::fabs(b.mid) * bl);
    return RBall(m, inflate(m, r + a.rad * 0.0));
}

inline RBall& operator+=(RBall& a, const RBall& b) { a = a + b; return a; }
inline RBall& operator-=(RBall& a, const RBall& b) { a = a - b; return a; }
inline RBall& operator*=(RBall& a, const RBall& b) { a = a * b; return a; }

inline RBall abs(const RBall& a) {
    if (a.lo() >= 0.0) return a;
    if (a.hi() <= 0.0) return -a;
    double hi = std::max(-a.lo(), a.hi());
    return RBall(hi / 2, inflate(hi / 2, hi / 2));
}

inline RBall from_endpoints(double lo, double hi) {
    double m = 0.5 * (lo + hi);
    return RBall(m, inflate(m, 0.5 * (hi - lo) + std::fabs(m) * 1e-15));
}

inline RBall sqrt(const RBall& a) {
    if (a.lo() < 0.0) {
        if (a.hi() < 0.0) throw std::domain_error("ball sqrt of negative interval");
        return from_endpoints(0.0, std::sqrt(a.hi()));
    }
    return from_endpoints(std::sqrt(a.lo()), std::sqrt(a.hi()));
}

inline RBall log(const RBall& a) {
    if (a.lo() <= 0.0) throw std::domain_error("ball log needs a positive interval");
    return from_endpoints(std::log(a.lo()), std::log(a.hi()));
}

inline RBall exp(const RBall& a) { return from_endpoints(std::exp(a.lo()), std::exp(a.hi())); }

inline RBall cosh(const RBall& a) {
    RBall m = abs(a);  // cosh is even, increasing on [0, inf)
    return from_endpoints(std::cosh(m.lo()), std::cosh(m.hi()));
}

/// cos with Lipschitz-1 radius propagation (enough for criterion checks).
inline RBall cos(const RBall& a) {
    double m = std::cos(a.mid);
    return RBall(m, inflate(m, a.rad));
}

inline RBall sin(const RBall& a) {
    double m = std::sin(a.mid);
    return RBall(m, inflate(m, a.rad));
}

/// arcosh on [1, inf); lo is clamped to 1 (useful when the enclosure of a
/// quantity that is >= 1 exactly dips below from rounding).
inline RBall arcosh_clamped(const RBall& a) {
    double lo = std::max(a.lo(), 1.0), hi = std::max(a.hi(), 1.0);
    if (a.hi() < 1.0 - 1e-12) throw std::domain_error("arcosh argument certainly < 1");
    return from_endpoints(std::acosh(lo), std::acosh(hi));
}

// ---------------------------------------------------------------------------
// Complex disks: center + radius.

struct CBall {
    std::complex<double> mid{0.0, 0.0};
    double rad = 0.0;

    CBall() = default;
    CBall(std::complex<double> m, double r) : mid(m), rad(r) {}
    explicit CBall(double re) : mid(re, 0.0), rad(0.0) {}
    CBall(const RBall& re, const RBall& im)
        : mid(re.mid, im.mid), rad(inflate(std::abs(mid), re.rad + im.rad)) {}

    RBall real() const { return RBall(mid.real(), inflate(mid.real(), rad)); }
    RBall imag() const { return RBall(mid.imag(), inflate(mid.imag(), rad)); }
};

inline CBall operator-(const CBall& a) { return CBall(-a.mid, a.rad); }

inline CBall operator+(const CBall& a, const CBall& b) {
    auto m = a.mid + b.mid;
    return CBall(m, inflate(std::abs(m), a.rad + b.rad));
}

inline CBall operator-(const CBall& a, const CBall& b) {
    auto m = a.mid - b.mid;
    return CBall(m, inflate(std::abs(m), a.rad + b.rad));
}

inline CBall operator*(const CBall& a, const CBall& b) {
    auto m = a.mid * b.mid;
    double r = std::abs(a.mid) * b.rad + std::abs(b.mid) * a.rad + a.rad * b.rad;
    return CBall(m, inflate(std::abs(m), r));
}

inline CBall conj(const CBall& a) { return CBall(std::conj(a.mid), a.rad); }

inline RBall abs(const CBall& a) {
    double m = std::abs(a.mid);
    double lo = std::max(m - a.rad, 0.0), hi = m + a.rad;
    return from_endpoints(lo, hi);
}

inline CBall operator/(const CBall& a, const CBall& b) {
    double bl = std::abs(b.mid) - b.rad;
    if (bl <= 0.0) throw UndecidedError("complex ball division by interval containing zero");
    auto m = a.mid / b.mid;
    double r = (std::abs(a.mid) * b.rad + std::abs(b.mid) * a.rad) / (std::abs(b.mid) * bl);
    return CBall(m, inflate(std::abs(m), r));
}

/// Analytic square-root branch through the principal sqrt of the center.
/// Valid whenever the disk excludes 0 (either branch has |.| >= sqrt(|mid|-rad),
/// giving the Lipschitz bound rad / (2 sqrt(|mid|-rad))).
inline CBall sqrt(const CBall& a) {
    double lo = std::abs(a.mid) - a.rad;
    if (lo <= 0.0) throw UndecidedError("complex ball sqrt: disk contains branch point");
    auto m = std::sqrt(a.mid);
    double r = a.rad / (2.0 * std::sqrt(lo));
    return CBall(m, inflate(std::abs(m), r));
}

}  // namespace diffuse
