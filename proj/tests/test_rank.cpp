#include "dioquad/diophantine.hpp"
#include "dioquad/fixtures.hpp"
#include "dioquad/rank.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace dioquad;

namespace {

IntegerModel fixture_model(const char* name) {
    return integer_model(induced_curve(Quadruple::make(paper_tuple(name).elements)).curve);
}

const Int kOne = Int(1) << kFixedBits;

}  // namespace

TEST_SUITE("rank") {

TEST_CASE("integer models") {
    CHECK(fixture_model("fermat") == IntegerModel{Int(1043), Int(183456), Int(1)});
    const Curve c = Curve::make(parse_rat("1/2"), parse_rat("1/3"));
    const IntegerModel m = integer_model(c);
    CHECK(m == IntegerModel{Int(30), Int(216), Int(6)});
    CHECK(j_invariant(m) == j_invariant(c));
    CHECK(j_invariant(m).mpq() == oracle::j_c4_delta(30, 216));
}

TEST_CASE("traces against Legendre sums and the Hasse bound") {
    const IntegerModel m = fixture_model("z2z2-rank10-a");
    for (long p : primes_up_to(400)) {
        if (p == 2 || !has_good_reduction(m, p)) {
            continue;
        }
        const std::int64_t a = oracle::reduce(mpq_class(m.A), p);
        const std::int64_t b = oracle::reduce(mpq_class(m.B), p);
        const std::int64_t ap = trace_ap(m, p);
        CHECK(ap == p + 1 - oracle::count_points_legendre(a, b, p));
        CHECK(ap * ap <= 4 * p);
    }
    CHECK_THROWS_AS(trace_ap(m, 2), std::invalid_argument);
}

TEST_CASE("fixed-point logarithm") {
    CHECK(fixed_log(1) == 0);
    CHECK(format_fixed_decimal(fixed_log(2), 60) ==
          "0.693147180559945309417232121458176568075500134360255254120680");
    for (long n : {3L, 10L, 997L, 65536L, 1000003L}) {
        CHECK(std::fabs(mpq_class(fixed_log(n), kOne).get_d() - std::log(static_cast<double>(n))) <
              1e-14 * std::log(static_cast<double>(n)));
    }
    for (long a = 2; a < 40; ++a) {
        for (long b = 2; b < 40; ++b) {
            const Int diff = fixed_log(a * b) - fixed_log(a) - fixed_log(b);
            CHECK(abs(diff) <= 2);
        }
    }
}

TEST_CASE("Mestre-Nagao terms are rounded once") {
    for (long p : {3L, 5L, 101L, 997L}) {
        for (std::int64_t ap : {-3L, 0L, 2L, 5L}) {
            const Int exact = Int(static_cast<long>(2 - ap)) * fixed_log(p);
            const Int err = mestre_nagao_term(p, ap) * p - exact;
            // fixed_log(p) itself carries up to half a unit of rounding
            CHECK(2 * abs(err) <= p + std::abs(2 - ap) + 1);
        }
    }
    CHECK(mestre_nagao_term(7, 2) == 0);
}

TEST_CASE("S(N) against a floating-point sum") {
    const IntegerModel m = fixture_model("fermat");
    const MestreNagaoSum s = mestre_nagao_sum(m, 1000);
    double ref = 0;
    std::vector<long> bad;
    for (long p : primes_up_to(1000)) {
        if (p == 2) {
            continue;
        }
        if (!has_good_reduction(m, p)) {
            bad.push_back(p);
            continue;
        }
        const std::int64_t a = oracle::reduce(mpq_class(m.A), p);
        const std::int64_t b = oracle::reduce(mpq_class(m.B), p);
        const std::int64_t ap = p + 1 - oracle::count_points_legendre(a, b, p);
        ref += static_cast<double>(2 - ap) * std::log(static_cast<double>(p)) / p;
    }
    CHECK(s.N == 1000);
    CHECK(s.bad_primes == bad);
    CHECK(s.terms == 167 - bad.size());
    CHECK(std::fabs(s.approx() - ref) < 1e-10);
    CHECK(s.decimal() == "6.36350911371418");

    const MestreNagaoSum half = mestre_nagao_sum(m, 500);
    const MestreNagaoSum rest = extend_mestre_nagao(m, half, 1000);
    CHECK(rest.fixed == s.fixed);
    CHECK(rest.terms == s.terms);
    CHECK(rest.bad_primes == s.bad_primes);
    CHECK_THROWS_AS(mestre_nagao_sum(m, 1), std::invalid_argument);
}

TEST_CASE("decimal rounding is half-even") {
    CHECK(format_fixed_decimal(kOne * 5 / 2, 1) == "2");
    CHECK(format_fixed_decimal(kOne * 7 / 2, 1) == "4");
    CHECK(format_fixed_decimal(-(kOne * 7 / 2), 1) == "-4");
    CHECK(format_fixed_decimal(kOne / 8, 2) == "0.12");
    CHECK(format_fixed_decimal(kOne * 3 / 8, 2) == "0.38");
    CHECK(format_fixed_decimal(kOne * 1234, 2) == "1200");
    CHECK(format_fixed_decimal(kOne * 9 / 8, 3) == "1.12");
    CHECK(format_fixed_decimal(kOne * 11 / 8, 3) == "1.38");
    CHECK(format_fixed_decimal(kOne * 1235 / 1000, 3) == "1.23");  // just below 1.235
    CHECK(format_fixed_decimal(kOne * 999999 / 1000000, 3) == "1.00");
    CHECK(format_fixed_decimal(Int(0)) == "0");
}

TEST_CASE("trivial rank bounds") {
    const RankBound fermat = trivial_rank_bound(fixture_model("fermat"));
    CHECK(fermat.bound == 7);
    CHECK_FALSE(fermat.incomplete);
    const RankBound r10 = trivial_rank_bound(fixture_model("z2z2-rank10-a"));
    CHECK(r10.bound == 29);
    CHECK_FALSE(r10.incomplete);

    const IntegerModel m = fixture_model("z2z2-rank10-a");
    const Int disc = m.A * m.A - 4 * m.B;
    CHECK(r10.bound == omega(factorize(m.B)).count + omega(factorize(disc)).count);
}

TEST_CASE("naive point search") {
    const Curve c = Curve::make(Rat(224), Rat(819));
    const auto found = naive_point_search(c, 20);
    bool has_p = false;
    int two_torsion = 0;
    for (const auto& fp : found) {
        CHECK(on_curve(c, fp.point));
        has_p = has_p || fp.point == Point(Rat(14), Rat(1666));
        two_torsion += fp.order.finite == 2 ? 1 : 0;
        if (fp.point == Point(Rat(14), Rat(1666))) {
            CHECK_FALSE(fp.order.is_finite());
        }
    }
    CHECK(has_p);
    CHECK(two_torsion == 1);  // only (0, 0) has |x| <= 20
    CHECK(std::is_sorted(found.begin(), found.end(),
                         [](const FoundPoint& a, const FoundPoint& b) { return a.point < b.point; }));
}

}  // TEST_SUITE
