#include "dioquad/diophantine.hpp"
#include "dioquad/errors.hpp"
#include "dioquad/factor.hpp"
#include "dioquad/fixtures.hpp"
#include "dioquad/torsion.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace dioquad;

namespace {

Curve fixture_curve(const char* name) {
    return induced_curve(Quadruple::make(paper_tuple(name).elements)).curve;
}

}  // namespace

TEST_SUITE("torsion") {

TEST_CASE("square criterion on the Fermat curve") {
    const Curve c = Curve::make(Rat(224), Rat(819));
    const auto sq = in_double_subgroup(c, Point(Rat(3025), Rat(194370)));
    REQUIRE(sq);
    CHECK(*sq == SquareTriple{Rat(55), Rat(57), Rat(62)});
    CHECK_FALSE(in_double_subgroup(c, Point(Rat(14), Rat(1666))));
    CHECK_THROWS_AS(in_double_subgroup(c, Point()), std::invalid_argument);
    CHECK_THROWS_AS(in_double_subgroup(c, Point(Rat(1), Rat(1))), std::invalid_argument);
}

TEST_CASE("halving quartic and division polynomial coefficients") {
    const Curve c = Curve::make(Rat(2), Rat(3));  // A = 5, B = 6
    CHECK(halving_quartic(c, Rat(7)) ==
          std::vector<Rat>{Rat(36), Rat(-168), Rat(-12 - 140), Rat(-28), Rat(1)});
    CHECK(psi3_coeffs(c) == std::vector<Rat>{Rat(-36), Rat(0), Rat(36), Rat(20), Rat(3)});
}

TEST_CASE("halves match the closed form") {
    const Curve c = Curve::make(Rat(224), Rat(819));
    const Point Q(Rat(3025), Rat(194370));
    const auto halves = halve_point(c, Q);
    CHECK(halves.size() == 4);
    std::set<mpq_class> xs;
    for (const Point& R : halves) {
        CHECK(dbl(c, R) == Q);
        xs.insert(R.x().mpq());
    }
    CHECK(xs == oracle::closed_form_half_x(Q.x().mpq(), c.p1().mpq(), c.p2().mpq()));
    CHECK(halve_point(c, Point(Rat(14), Rat(1666))).empty());
    CHECK_THROWS_AS(halve_point(c, Point()), std::invalid_argument);
}

TEST_CASE("halves of random doubles") {
    std::mt19937_64 g(23);
    int checked = 0;
    while (checked < 40) {
        const mpq_class x0 = oracle::draw_rational(g, 40), p1 = oracle::draw_rational(g, 40),
                        y0 = oracle::draw_rational(g, 40);
        if (x0 + p1 == 0) {
            continue;
        }
        const mpq_class p2 = y0 * y0 / (x0 * (x0 + p1)) - x0;
        if (p2 == 0 || p2 == p1) {
            continue;
        }
        const Curve c = Curve::make(Rat::from_mpq(p1), Rat::from_mpq(p2));
        const Point R(Rat::from_mpq(x0), Rat::from_mpq(y0));
        const Point Q = dbl(c, R);
        if (Q.is_infinity()) {
            continue;
        }
        const auto halves = halve_point(c, Q);
        CHECK(std::find(halves.begin(), halves.end(), R) != halves.end());
        std::set<mpq_class> xs;
        for (const Point& h : halves) {
            CHECK(dbl(c, h) == Q);
            xs.insert(h.x().mpq());
        }
        CHECK(xs == oracle::closed_form_half_x(Q.x().mpq(), p1, p2));
        ++checked;
    }
}

TEST_CASE("3-torsion") {
    const Curve c = fixture_curve("z2z6-rank3-a");
    const auto pts = three_torsion(c);
    CHECK(pts.size() == 2);
    for (const Point& p : pts) {
        CHECK(point_order(c, p).finite == 3);
    }
    CHECK(three_torsion(Curve::make(Rat(224), Rat(819))).empty());
}

TEST_CASE("classification of the published curves") {
    const std::vector<std::pair<const char*, int>> expected{
        {"fermat", 1},        {"gibbs-sub-1", 1},   {"gibbs-sub-2", 1},  {"gibbs-sub-3", 1},
        {"z2z2-rank10-a", 1}, {"z2z2-rank10-b", 1}, {"z2z4-rank6-a", 2}, {"z2z4-rank6-b", 2},
        {"z2z6-rank3-a", 3},  {"z2z6-rank3-b", 3},  {"z2z8-rank3", 4},
    };
    for (const auto& [name, k] : expected) {
        CAPTURE(name);
        const Curve c = fixture_curve(name);
        const TorsionClass tc = torsion_group(c);
        CHECK(tc.k == k);
        CHECK(tc.name() == "Z/2xZ/" + std::to_string(2 * k));
        if (k > 1) {
            REQUIRE(tc.witness);
            CHECK(point_order(c, *tc.witness).finite == 2 * k);
        } else {
            CHECK_FALSE(tc.witness);
        }
        CHECK(torsion_order_bound(c, 10) % tc.order() == 0);
    }
    CHECK(torsion_group(t_form_curve(parse_rat("1/2"))).k == 4);
    CHECK(torsion_group(t_form_curve(parse_rat("-5/3"))).k == 4);
}

TEST_CASE("two-torsion points") {
    const Curve c = Curve::make(Rat(224), Rat(819));
    CHECK(two_torsion_points(c) == std::vector<Point>{Point(Rat(0), Rat(0)),
                                                       Point(Rat(-224), Rat(0)),
                                                       Point(Rat(-819), Rat(0))});
}

TEST_CASE("point counts against Legendre sums") {
    std::mt19937_64 g(29);
    for (int i = 0; i < 10; ++i) {
        const mpq_class p1 = oracle::draw_rational(g, 60), p2 = oracle::draw_rational(g, 60);
        if (p1 == p2) {
            continue;
        }
        const Curve c = Curve::make(Rat::from_mpq(p1), Rat::from_mpq(p2));
        const mpq_class disc = oracle::discriminant_roots(0, -p1, -p2);
        for (long p : primes_up_to(120)) {
            if (p == 2) {
                continue;
            }
            const bool good = p1.get_den() % p != 0 && p2.get_den() % p != 0 &&
                              disc.get_num() % p != 0;
            CHECK(has_good_reduction(c, p) == good);
            if (!good) {
                CHECK_THROWS_AS(count_points_mod_p(c, p), std::invalid_argument);
                continue;
            }
            const std::int64_t a = oracle::reduce(p1 + p2, p), b = oracle::reduce(p1 * p2, p);
            const std::int64_t n = count_points_mod_p(c, p);
            CHECK(n == oracle::count_points_legendre(a, b, p));
            if (p < 60) {
                CHECK(n == oracle::count_points_projective(a, b, p));
            }
            CHECK(n % 4 == 0);
        }
    }
    const Curve c = Curve::make(Rat(224), Rat(819));
    CHECK_THROWS_AS(count_points_mod_p(c, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_points_mod_p(c, 9), std::invalid_argument);
    CHECK_THROWS_AS(torsion_order_bound(c, 1), std::invalid_argument);
}

}  // TEST_SUITE
