#pragma once

#include "dioquad/curve.hpp"
#include "dioquad/factor.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dioquad {

/// y^2 = x^3 + A x^2 + B x with integral A, B. From a Curve it is the image
/// of (x, y) -> (s^2 x, s^3 y), s the lcm of the denominators of p1 and p2.
struct IntegerModel {
    Int A;
    Int B;
    Int scale = 1;

    friend bool operator==(const IntegerModel&, const IntegerModel&) = default;
};

IntegerModel integer_model(const Curve& c);
Rat j_invariant(const IntegerModel& m);

/// p odd, B (A^2 - 4B) not divisible by p.
bool has_good_reduction(const IntegerModel& m, long p);

/// a_p = p + 1 - #E(F_p). Throws std::invalid_argument for p = 2 or bad
/// reduction; throws std::logic_error if the Hasse bound fails.
std::int64_t trace_ap(const IntegerModel& m, long p);

/// Bits after the binary point in Mestre-Nagao fixed-point arithmetic.
inline constexpr int kFixedBits = 256;
/// Significant decimal digits reported for S(N).
inline constexpr int kScoreDigits = 15;

/// round(log(n) * 2^kFixedBits), from atanh series in integer arithmetic.
Int fixed_log(long n);

/// round((2 - a_p) log(p) / p * 2^kFixedBits).
Int mestre_nagao_term(long p, std::int64_t ap);

/// S(N) = sum over good odd primes p <= N of (2 - a_p) log(p) / p. Each term
/// is rounded once to fixed point and the terms are added exactly, so the
/// value does not depend on summation order.
struct MestreNagaoSum {
    long N = 0;
    Int fixed = 0;  // S(N) * 2^kFixedBits
    std::vector<long> bad_primes;
    std::size_t terms = 0;

    /// kScoreDigits significant digits, round-half-even, plain decimal notation.
    std::string decimal() const;
    double approx() const;
};

MestreNagaoSum mestre_nagao_sum(const IntegerModel& m, long N);

/// Continues `prefix` with the primes in (prefix.N, N].
MestreNagaoSum extend_mestre_nagao(const IntegerModel& m, MestreNagaoSum prefix, long N);

/// Rounds fixed / 2^kFixedBits to `digits` significant digits, ties to even.
std::string format_fixed_decimal(const Int& fixed, int digits = kScoreDigits);

struct RankBound {
    unsigned bound = 0;
    /// Set when a factorization stopped early; the true omega sum may be larger.
    bool incomplete = false;
};

/// omega(B) + omega(A^2 - 4B), signs and units ignored.
RankBound trivial_rank_bound(const IntegerModel& m, const FactorBudget& budget = {});

struct FoundPoint {
    Point point;
    PointOrder order;
};

/// Points with x = n/e^2, |n| <= height_bound, 1 <= e <= ceil(sqrt(height_bound)),
/// both signs of y, sorted and tagged with point_order.
std::vector<FoundPoint> naive_point_search(const Curve& c, long height_bound);

}  // namespace dioquad
