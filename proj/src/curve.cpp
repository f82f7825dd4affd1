#include "dioquad/curve.hpp"

#include "dioquad/errors.hpp"

#include <stdexcept>

namespace dioquad {

Curve Curve::make(const Rat& p1, const Rat& p2) {
    if (p1.is_zero()) {
        throw DegenerateError("p1", "singular curve: p1 = 0");
    }
    if (p2.is_zero()) {
        throw DegenerateError("p2", "singular curve: p2 = 0");
    }
    if (p1 == p2) {
        throw DegenerateError("p1-p2", "singular curve: p1 = p2");
    }
    return Curve(p1, p2);
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.is_infinity() || b.is_infinity()) {
        return b.is_infinity() <=> a.is_infinity();
    }
    if (auto c = a.x() <=> b.x(); c != 0) {
        return c;
    }
    return a.y() <=> b.y();
}

std::string Point::to_string() const {
    if (!affine_) {
        return "inf";
    }
    return "(" + x_.to_string() + "," + y_.to_string() + ")";
}

Point parse_point(std::string_view text) {
    if (text == "inf") {
        return Point::infinity();
    }
    if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
        throw ParseError("expected 'inf' or '(x,y)', got '" + std::string(text) + "'", 0, 1);
    }
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw ParseError("missing ',' in point '" + std::string(text) + "'", 0, text.size());
    }
    try {
        return Point(parse_rat(text.substr(1, comma - 1)),
                     parse_rat(text.substr(comma + 1, text.size() - comma - 2)));
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " in point '" + std::string(text) + "'", 0,
                         e.column());
    }
}

bool on_curve(const Curve& c, const Point& pt) {
    if (pt.is_infinity()) {
        return true;
    }
    return pt.y() * pt.y() == c.rhs(pt.x());
}

Point negate(const Point& pt) {
    if (pt.is_infinity()) {
        return pt;
    }
    return Point(pt.x(), -pt.y());
}

namespace detail {

Point add_unchecked(const Curve& c, const Point& a, const Point& b) {
    if (a.is_infinity()) {
        return b;
    }
    if (b.is_infinity()) {
        return a;
    }
    Rat slope;
    if (a.x() == b.x()) {
        if (a.y() != b.y() || a.y().is_zero()) {
            // Inverse pair, or doubling a 2-torsion point.
            return Point::infinity();
        }
        const Rat& x = a.x();
        slope = (Rat(3) * x * x + Rat(2) * c.A() * x + c.B()) / (Rat(2) * a.y());
    } else {
        slope = (b.y() - a.y()) / (b.x() - a.x());
    }
    Rat x3 = slope * slope - c.A() - a.x() - b.x();
    Rat y3 = slope * (a.x() - x3) - a.y();
    return Point(std::move(x3), std::move(y3));
}

Point mul_unchecked(const Curve& c, long n, const Point& pt) {
    Point base = n < 0 ? negate(pt) : pt;
    unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    Point acc;
    while (k != 0) {
        if ((k & 1UL) != 0) {
            acc = add_unchecked(c, acc, base);
        }
        k >>= 1;
        if (k != 0) {
            base = add_unchecked(c, base, base);
        }
    }
    return acc;
}

}  // namespace detail

namespace {

void require_on_curve(const Curve& c, const Point& pt) {
    if (!on_curve(c, pt)) {
        throw std::invalid_argument("point " + pt.to_string() + " is not on the curve");
    }
}

}  // namespace

Point add(const Curve& c, const Point& a, const Point& b) {
    require_on_curve(c, a);
    require_on_curve(c, b);
    return detail::add_unchecked(c, a, b);
}

Point dbl(const Curve& c, const Point& a) { return add(c, a, a); }

Point mul(const Curve& c, long n, const Point& pt) {
    require_on_curve(c, pt);
    return detail::mul_unchecked(c, n, pt);
}

PointOrder point_order(const Curve& c, const Point& pt) {
    require_on_curve(c, pt);
    Point acc = pt;
    for (int n = 1; n <= kMazurOrderBound; ++n) {
        if (acc.is_infinity()) {
            return PointOrder{n};
        }
        acc = detail::add_unchecked(c, acc, pt);
    }
    return PointOrder{};
}

Rat j_invariant(const Curve& c) {
    const Rat A = c.A();
    const Rat B = c.B();
    const Rat u = A * A - Rat(3) * B;
    return Rat(256) * u * u * u / (B * B * (A * A - Rat(4) * B));
}

Curve t_form_curve(const Rat& T) {
    if (T.is_zero()) {
        throw DegenerateError("T");
    }
    if (T == Rat(1)) {
        throw DegenerateError("T-1");
    }
    if (T == Rat(-1)) {
        throw DegenerateError("T+1");
    }
    const Rat s = Rat(2) * T / (T * T - Rat(1));
    return Curve::make(s * s, reciprocal(s * s));
}

}  // namespace dioquad
