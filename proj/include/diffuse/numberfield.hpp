#pragma once

// Exact arithmetic in Q(alpha) for a monic squarefree integer minimal
// polynomial, with certified floating evaluations at the real and complex
// places. Values are immutable; every operation is pure.

#include "diffuse/ball.hpp"
#include "diffuse/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace diffuse {

struct Place {
    bool is_real = true;
    // Real place: exact isolating interval [lo, hi], f(lo) and f(hi) of
    // opposite signs (degenerate lo == hi for degree-1 fields).
    Rational lo, hi;
    // Complex place: certified disk around the representative root with
    // positive imaginary part.
    CBall disk;
};

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    /// Validates and isolates places. Throws std::invalid_argument on
    /// non-monic, degree-0, non-squarefree input, or (degree > 1) a rational
    /// root.
    static FieldPtr create(const std::vector<BigInt>& monic_coeffs);

    int degree() const { return degree_; }
    const std::vector<BigInt>& minpoly() const { return minpoly_; }
    const std::vector<Place>& places() const { return places_; }
    int real_place_count() const { return real_places_; }
    /// Index of the first complex place; throws if the field is totally real.
    int first_complex_place() const;

    /// Certified enclosure of the place's root with radius <= target.
    CBall refine_place(int place, double target_radius) const;

    bool same_as(const NumberField& o) const { return minpoly_ == o.minpoly_; }

  private:
    NumberField() = default;
    std::vector<BigInt> minpoly_;  // c0..cn, cn == 1
    int degree_ = 0;
    int real_places_ = 0;
    std::vector<Place> places_;
};

class NFElem {
  public:
    NFElem() = default;
    NFElem(FieldPtr f, std::vector<Rational> coeffs);
    static NFElem zero(const FieldPtr& f);
    static NFElem one(const FieldPtr& f);
    static NFElem from_rational(const FieldPtr& f, const Rational& q);
    static NFElem gen(const FieldPtr& f);  // alpha (degree >= 2)

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;               // all coeffs beyond c0 vanish
    const Rational& rational_part() const { return c_[0]; }
    bool is_integral() const;               // integer coords in Z[alpha]

    NFElem operator-() const;
    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator*(const Rational& q) const;
    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    /// Field inverse via extended gcd with the minimal polynomial.
    NFElem inverse() const;
    NFElem pow(unsigned e) const;

    /// Exact field norm N_{K/Q} (determinant of the multiplication matrix).
    Rational norm() const;
    /// Exact field trace Tr_{K/Q}.
    Rational trace_q() const;

    void append_key(std::string& out) const;

  private:
    void reduce(std::vector<Rational>& raw) const;
    FieldPtr field_;
    std::vector<Rational> c_;
};

inline NFElem operator*(const Rational& q, const NFElem& a) { return a * q; }

/// pi-adic valuation on Z[alpha] by repeated exact division: largest k with
/// a / pi^k still integral; nullopt encodes +infinity (a == 0).
/// Throws std::domain_error when a is not integral.
std::optional<int> val_pi(const NFElem& a, const NFElem& pi);

struct PlaceValue {
    bool is_real = true;
    CBall value;
};

/// Interval-certified embedding at the given place, radius <= target_radius.
PlaceValue embed(const NFElem& a, int place, double target_radius);

}  // namespace diffuse
