#pragma once

#include "dioquad/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace dioquad {

/// y^2 = x (x + p1) (x + p2), equivalently y^2 = x^3 + A x^2 + B x with
/// A = p1 + p2 and B = p1 p2. The three roots 0, -p1, -p2 are distinct.
class Curve {
  public:
    /// Throws DegenerateError when p1 == 0, p2 == 0 or p1 == p2.
    static Curve make(const Rat& p1, const Rat& p2);

    const Rat& p1() const { return p1_; }
    const Rat& p2() const { return p2_; }
    Rat A() const { return p1_ + p2_; }
    Rat B() const { return p1_ * p2_; }

    /// x^3 + A x^2 + B x
    Rat rhs(const Rat& x) const { return x * (x + p1_) * (x + p2_); }

    friend bool operator==(const Curve&, const Curve&) = default;

  private:
    Curve(Rat p1, Rat p2) : p1_(std::move(p1)), p2_(std::move(p2)) {}

    Rat p1_;
    Rat p2_;
};

/// Affine point or the point at infinity O.
class Point {
  public:
    Point() = default;  // O
    Point(Rat x, Rat y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}

    static Point infinity() { return Point(); }

    bool is_infinity() const { return !affine_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }

    friend bool operator==(const Point&, const Point&) = default;
    /// O first, then lexicographic on (x, y).
    friend std::strong_ordering operator<=>(const Point& a, const Point& b);

    /// "inf" or "(x,y)".
    std::string to_string() const;

  private:
    bool affine_ = false;
    Rat x_;
    Rat y_;
};

/// Parses the text produced by Point::to_string. Throws ParseError.
Point parse_point(std::string_view text);

/// Finite order 1..12, or infinite.
struct PointOrder {
    std::optional<int> finite;

    bool is_finite() const { return finite.has_value(); }
    friend bool operator==(const PointOrder&, const PointOrder&) = default;
    std::string to_string() const { return finite ? std::to_string(*finite) : "infinite"; }
};

inline constexpr int kMazurOrderBound = 12;

bool on_curve(const Curve& c, const Point& pt);

Point negate(const Point& pt);

/// Chord-tangent addition. Throws std::invalid_argument for off-curve input.
Point add(const Curve& c, const Point& a, const Point& b);
Point dbl(const Curve& c, const Point& a);

/// n * pt by double-and-add; negative n multiplies -pt.
Point mul(const Curve& c, long n, const Point& pt);

/// Smallest n <= 12 with n * pt = O, else infinite.
PointOrder point_order(const Curve& c, const Point& pt);

Rat j_invariant(const Curve& c);

/// The Z/2 x Z/8 normal form x (x + (2T/(T^2-1))^2) (x + ((T^2-1)/(2T))^2).
/// Throws DegenerateError for T in {0, 1, -1}.
Curve t_form_curve(const Rat& T);

namespace detail {
// Group law without membership checks; inputs must already lie on c.
Point add_unchecked(const Curve& c, const Point& a, const Point& b);
Point mul_unchecked(const Curve& c, long n, const Point& pt);
}  // namespace detail

}  // namespace dioquad
