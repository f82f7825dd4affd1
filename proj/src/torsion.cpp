#include "dioquad/torsion.hpp"

#include "dioquad/errors.hpp"
#include "dioquad/factor.hpp"
#include "dioquad/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dioquad {

std::optional<SquareTriple> in_double_subgroup(const Curve& c, const Point& pt) {
    if (pt.is_infinity()) {
        throw std::invalid_argument("in_double_subgroup: O is trivially in 2E(Q)");
    }
    if (!on_curve(c, pt)) {
        throw std::invalid_argument("in_double_subgroup: point " + pt.to_string() +
                                    " is not on the curve");
    }
    auto alpha = perfect_square(pt.x());
    if (!alpha) {
        return std::nullopt;
    }
    auto beta = perfect_square(pt.x() + c.p1());
    if (!beta) {
        return std::nullopt;
    }
    auto gamma = perfect_square(pt.x() + c.p2());
    if (!gamma) {
        return std::nullopt;
    }
    return SquareTriple{*alpha, *beta, *gamma};
}

std::vector<Rat> halving_quartic(const Curve& c, const Rat& xq) {
    const Rat A = c.A();
    const Rat B = c.B();
    // x^4 - 4 xq x^3 - (2B + 4 xq A) x^2 - 4 xq B x + B^2
    return {B * B, Rat(-4) * xq * B, -(Rat(2) * B + Rat(4) * xq * A), Rat(-4) * xq, Rat(1)};
}

std::vector<Point> halve_point(const Curve& c, const Point& q) {
    if (q.is_infinity()) {
        throw std::invalid_argument("halve_point: expected an affine point");
    }
    if (!on_curve(c, q)) {
        throw std::invalid_argument("halve_point: point " + q.to_string() +
                                    " is not on the curve");
    }
    std::vector<Point> halves;
    for (const Rat& x : rational_roots(Polynomial(halving_quartic(c, q.x())))) {
        auto y = perfect_square(c.rhs(x));
        if (!y || y->is_zero()) {
            continue;
        }
        for (const Rat& ys : {*y, -*y}) {
            Point r(x, ys);
            if (detail::add_unchecked(c, r, r) == q) {
                halves.push_back(std::move(r));
            }
        }
    }
    std::sort(halves.begin(), halves.end());
    return halves;
}

std::vector<Rat> psi3_coeffs(const Curve& c) {
    const Rat A = c.A();
    const Rat B = c.B();
    return {-(B * B), Rat(0), Rat(6) * B, Rat(4) * A, Rat(3)};
}

std::vector<Point> three_torsion(const Curve& c) {
    std::vector<Point> points;
    for (const Rat& x : rational_roots(Polynomial(psi3_coeffs(c)))) {
        auto y = perfect_square(c.rhs(x));
        if (!y || y->is_zero()) {
            continue;
        }
        for (const Rat& ys : {*y, -*y}) {
            Point p(x, ys);
            if (detail::mul_unchecked(c, 3, p).is_infinity()) {
                points.push_back(std::move(p));
            }
        }
    }
    std::sort(points.begin(), points.end());
    return points;
}

std::string TorsionClass::name() const { return "Z/2xZ/" + std::to_string(2 * k); }

std::vector<Point> two_torsion_points(const Curve& c) {
    return {Point(Rat(0), Rat(0)), Point(-c.p1(), Rat(0)), Point(-c.p2(), Rat(0))};
}

namespace {

struct FourTorsionScan {
    std::optional<Point> order4;
    std::optional<Point> order8;
};

FourTorsionScan scan_four_torsion(const Curve& c) {
    FourTorsionScan scan;
    for (const Point& t : two_torsion_points(c)) {
        for (const Point& r : halve_point(c, t)) {
            if (!scan.order4) {
                scan.order4 = r;
            }
            auto s = halve_point(c, r);
            if (!s.empty()) {
                scan.order8 = s.front();
                return scan;
            }
        }
    }
    return scan;
}

TorsionClass with_witness(const Curve& c, int k, Point witness) {
    if (point_order(c, witness) != PointOrder{2 * k}) {
        throw std::logic_error("torsion witness " + witness.to_string() + " does not have order " +
                               std::to_string(2 * k));
    }
    return TorsionClass{k, std::move(witness)};
}

}  // namespace

TorsionClass torsion_group(const Curve& c) {
    const std::vector<Point> three = three_torsion(c);
    const FourTorsionScan four = scan_four_torsion(c);
    if (!three.empty()) {
        if (four.order4) {
            throw std::logic_error("Mazur exclusion violated: 3-torsion and 4-torsion together");
        }
        return with_witness(c, 3, detail::add_unchecked(c, Point(Rat(0), Rat(0)), three.front()));
    }
    if (four.order8) {
        return with_witness(c, 4, *four.order8);
    }
    if (four.order4) {
        return with_witness(c, 2, *four.order4);
    }
    return TorsionClass{};
}

namespace detail {

std::int64_t reduce_mod(const Rat& r, long p) {
    const auto up = static_cast<unsigned long>(p);
    const auto num = static_cast<std::int64_t>(mpz_fdiv_ui(r.num().get_mpz_t(), up));
    const Int den = r.den();
    Int inv;
    const Int modulus(p);
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw std::invalid_argument("denominator not invertible mod " + std::to_string(p));
    }
    return (num * static_cast<std::int64_t>(inv.get_si())) % p;
}

std::int64_t count_points_reduced(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::vector<char> is_square(static_cast<std::size_t>(p), 0);
    for (std::int64_t y = 0; y < p; ++y) {
        is_square[static_cast<std::size_t>(y * y % p)] = 1;
    }
    std::int64_t count = 1;  // O
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t f = ((x * x % p + a * x % p + b) % p) * x % p;
        if (f == 0) {
            count += 1;
        } else if (is_square[static_cast<std::size_t>(f)] != 0) {
            count += 2;
        }
    }
    return count;
}

}  // namespace detail

bool has_good_reduction(const Curve& c, long p) {
    const auto up = static_cast<unsigned long>(p);
    const Rat A = c.A();
    const Rat B = c.B();
    if (mpz_divisible_ui_p(A.den().get_mpz_t(), up) != 0 ||
        mpz_divisible_ui_p(B.den().get_mpz_t(), up) != 0) {
        return false;
    }
    const Rat disc = B * B * (A * A - Rat(4) * B);
    return mpz_divisible_ui_p(disc.num().get_mpz_t(), up) == 0;
}

std::int64_t count_points_mod_p(const Curve& c, long p) {
    if (p == 2) {
        throw std::invalid_argument("count_points_mod_p: p = 2 is not supported");
    }
    if (p < 3 || !is_prime(Int(p))) {
        throw std::invalid_argument("count_points_mod_p: " + std::to_string(p) +
                                    " is not an odd prime");
    }
    if (!has_good_reduction(c, p)) {
        throw std::invalid_argument("count_points_mod_p: bad reduction at " + std::to_string(p));
    }
    return detail::count_points_reduced(detail::reduce_mod(c.A(), p), detail::reduce_mod(c.B(), p),
                                        p);
}

std::int64_t torsion_order_bound(const Curve& c, int prime_budget) {
    if (prime_budget < 2) {
        throw std::invalid_argument("torsion_order_bound: prime budget must be at least 2");
    }
    std::int64_t g = 0;
    int used = 0;
    long limit = 256;
    long next = 3;
    while (used < prime_budget) {
        for (long p : primes_up_to(limit)) {
            if (p < next || used == prime_budget) {
                continue;
            }
            if (has_good_reduction(c, p)) {
                g = std::gcd(g, count_points_mod_p(c, p));
                ++used;
            }
        }
        next = limit + 1;
        limit *= 2;
    }
    return g;
}

}  // namespace dioquad
