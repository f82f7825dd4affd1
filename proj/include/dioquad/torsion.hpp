#pragma once

#include "dioquad/curve.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dioquad {

/// Nonnegative roots with alpha^2 = x1, beta^2 = x1 + p1, gamma^2 = x1 + p2.
struct SquareTriple {
    Rat alpha;
    Rat beta;
    Rat gamma;

    friend bool operator==(const SquareTriple&, const SquareTriple&) = default;
};

/// Full 2-torsion square criterion: an affine point lies in 2E(Q) exactly when
/// x1, x1 + p1 and x1 + p2 are all rational squares. Throws
/// std::invalid_argument for O (trivially a double) and off-curve points.
std::optional<SquareTriple> in_double_subgroup(const Curve& c, const Point& pt);

/// The halving quartic (x^2 - B)^2 - 4 x(q) (x^3 + A x^2 + B x).
std::vector<Rat> halving_quartic(const Curve& c, const Rat& xq);

/// Every rational R with 2R = q, sorted. Candidates come from the rational
/// roots of the halving quartic and both y signs; each is kept only if
/// doubling reproduces q exactly.
std::vector<Point> halve_point(const Curve& c, const Point& q);

/// 3 x^4 + 4 A x^3 + 6 B x^2 - B^2.
std::vector<Rat> psi3_coeffs(const Curve& c);

/// All affine rational points of order 3, sorted.
std::vector<Point> three_torsion(const Curve& c);

/// Z/2 x Z/2k for k in {1, 2, 3, 4}.
struct TorsionClass {
    int k = 1;
    /// Point of order 2k, present when k > 1.
    std::optional<Point> witness;

    int order() const { return 4 * k; }
    std::string name() const;
};

std::vector<Point> two_torsion_points(const Curve& c);

/// Checks 3-torsion first, then order-8 points (a half of a 2-torsion point
/// that can itself be halved), then order-4 points. Throws std::logic_error if
/// 3-torsion and 4-torsion are ever found together.
TorsionClass torsion_group(const Curve& c);

/// Good reduction at an odd prime p: p divides no denominator of A, B and not
/// the numerator of B^2 (A^2 - 4B).
bool has_good_reduction(const Curve& c, long p);

/// #E(F_p) by enumeration. Throws std::invalid_argument for p = 2 or bad
/// reduction.
std::int64_t count_points_mod_p(const Curve& c, long p);

/// gcd of #E(F_p) over the first `prime_budget` good odd primes.
std::int64_t torsion_order_bound(const Curve& c, int prime_budget);

namespace detail {
/// #E(F_p) for y^2 = x^3 + a x^2 + b x with a, b already reduced into [0, p).
std::int64_t count_points_reduced(std::int64_t a, std::int64_t b, std::int64_t p);
/// r mod p for a rational r whose denominator is prime to p.
std::int64_t reduce_mod(const Rat& r, long p);
}  // namespace detail

}  // namespace dioquad
