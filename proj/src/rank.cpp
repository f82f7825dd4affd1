#include "dioquad/rank.hpp"

#include "dioquad/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace dioquad {

IntegerModel integer_model(const Curve& c) {
    const Int s = lcm(c.p1().den(), c.p2().den());
    const Rat s2 = Rat(s * s);
    const Rat A = c.A() * s2;
    const Rat B = c.B() * s2 * s2;
    return IntegerModel{A.num(), B.num(), s};
}

Rat j_invariant(const IntegerModel& m) {
    const Int u = m.A * m.A - 3 * m.B;
    return Rat(256 * u * u * u, m.B * m.B * (m.A * m.A - 4 * m.B));
}

bool has_good_reduction(const IntegerModel& m, long p) {
    if (p < 3) {
        return false;
    }
    const auto up = static_cast<unsigned long>(p);
    const Int disc = m.B * (m.A * m.A - 4 * m.B);
    return mpz_divisible_ui_p(disc.get_mpz_t(), up) == 0;
}

std::int64_t trace_ap(const IntegerModel& m, long p) {
    if (p == 2 || p < 2 || !is_prime(Int(p))) {
        throw std::invalid_argument("trace_ap: " + std::to_string(p) + " is not an odd prime");
    }
    if (!has_good_reduction(m, p)) {
        throw std::invalid_argument("trace_ap: bad reduction at " + std::to_string(p));
    }
    const auto up = static_cast<unsigned long>(p);
    const auto a = static_cast<std::int64_t>(mpz_fdiv_ui(m.A.get_mpz_t(), up));
    const auto b = static_cast<std::int64_t>(mpz_fdiv_ui(m.B.get_mpz_t(), up));
    const std::int64_t ap = p + 1 - detail::count_points_reduced(a, b, p);
    if (ap * ap > 4 * static_cast<std::int64_t>(p)) {
        throw std::logic_error("Hasse bound violated at p = " + std::to_string(p));
    }
    return ap;
}

namespace {

constexpr int kGuardBits = 64;

// atanh(num/den) * 2^bits, truncated; requires 0 <= num/den <= 1/3.
Int atanh_fixed(const Int& num, const Int& den, int bits) {
    Int power = (Int(num) << bits) / den;
    const Int num2 = num * num;
    const Int den2 = den * den;
    Int sum = 0;
    for (unsigned long k = 1; power != 0; k += 2) {
        sum += power / k;
        power = power * num2 / den2;
    }
    return sum;
}

Int log_fixed(long n, int bits) {
    if (n < 1) {
        throw std::domain_error("log of non-positive integer");
    }
    int k = 0;
    while ((2L << k) <= n) {
        ++k;
    }
    const Int pk = Int(1) << k;
    const Int ln2 = 2 * atanh_fixed(1, 3, bits);
    return k * ln2 + 2 * atanh_fixed(Int(n) - pk, Int(n) + pk, bits);
}

// Nearest integer to num/den, den > 0.
Int round_div(const Int& num, const Int& den) {
    Int q;
    const Int twice = 2 * num + den;
    const Int den2 = 2 * den;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
    return q;
}

}  // namespace

Int fixed_log(long n) {
    return round_div(log_fixed(n, kFixedBits + kGuardBits), Int(1) << kGuardBits);
}

Int mestre_nagao_term(long p, std::int64_t ap) {
    const Int weighted = Int(static_cast<long>(2 - ap)) * log_fixed(p, kFixedBits + kGuardBits);
    return round_div(weighted, Int(p) << kGuardBits);
}

std::string format_fixed_decimal(const Int& fixed, int digits) {
    if (fixed == 0) {
        return "0";
    }
    const Int a = abs(fixed);
    Int ten_digits;
    mpz_ui_pow_ui(ten_digits.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const Int one = Int(1) << kFixedBits;

    auto scaled = [&](long e) {
        // round_half_even(a * 10^-e / 2^kFixedBits)
        Int num = a;
        Int den = one;
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
        if (e < 0) {
            num *= pw;
        } else {
            den *= pw;
        }
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        const int c = cmp(Int(2 * r), den);
        if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()) != 0)) {
            ++q;
        }
        return q;
    };

    // Start from a size estimate and adjust until q has exactly `digits` digits.
    const long int_digits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) - kFixedBits;
    long e = static_cast<long>(std::floor(static_cast<double>(int_digits) * 0.30102999566398120)) -
             digits;
    Int q = scaled(e);
    while (q >= ten_digits) {
        q = scaled(++e);
    }
    while (q * 10 < ten_digits) {
        q = scaled(--e);
        if (q >= ten_digits) {
            q = scaled(++e);
            break;
        }
    }

    std::string d = q.get_str();
    std::string out = fixed < 0 ? "-" : "";
    if (e >= 0) {
        out += d + std::string(static_cast<std::size_t>(e), '0');
        return out;
    }
    const long point = static_cast<long>(d.size()) + e;
    if (point > 0) {
        out += d.substr(0, static_cast<std::size_t>(point)) + "." +
               d.substr(static_cast<std::size_t>(point));
    } else {
        out += "0." + std::string(static_cast<std::size_t>(-point), '0') + d;
    }
    return out;
}

std::string MestreNagaoSum::decimal() const { return format_fixed_decimal(fixed); }

double MestreNagaoSum::approx() const {
    return mpq_class(fixed, Int(1) << kFixedBits).get_d();
}

MestreNagaoSum extend_mestre_nagao(const IntegerModel& m, MestreNagaoSum prefix, long N) {
    if (N < prefix.N) {
        throw std::invalid_argument("extend_mestre_nagao: cutoff below the prefix cutoff");
    }
    for (long p : primes_up_to(N)) {
        if (p <= prefix.N || p == 2) {
            continue;
        }
        if (!has_good_reduction(m, p)) {
            prefix.bad_primes.push_back(p);
            continue;
        }
        prefix.fixed += mestre_nagao_term(p, trace_ap(m, p));
        ++prefix.terms;
    }
    prefix.N = N;
    return prefix;
}

MestreNagaoSum mestre_nagao_sum(const IntegerModel& m, long N) {
    if (N < 2) {
        throw std::invalid_argument("mestre_nagao_sum: N must be at least 2");
    }
    return extend_mestre_nagao(m, MestreNagaoSum{}, N);
}

RankBound trivial_rank_bound(const IntegerModel& m, const FactorBudget& budget) {
    const OmegaCount w1 = omega(factorize(m.B, budget));
    const OmegaCount w2 = omega(factorize(m.A * m.A - 4 * m.B, budget));
    return RankBound{w1.count + w2.count, w1.is_lower_bound || w2.is_lower_bound};
}

std::vector<FoundPoint> naive_point_search(const Curve& c, long height_bound) {
    if (height_bound < 1) {
        throw std::invalid_argument("naive_point_search: height bound must be positive");
    }
    long max_e = 1;
    while (max_e * max_e < height_bound) {
        ++max_e;
    }
    std::set<Rat> xs;
    for (long e = 1; e <= max_e; ++e) {
        for (long n = -height_bound; n <= height_bound; ++n) {
            xs.insert(Rat(Int(n), Int(e * e)));
        }
    }
    std::vector<FoundPoint> found;
    for (const Rat& x : xs) {
        auto y = perfect_square(c.rhs(x));
        if (!y) {
            continue;
        }
        Point pt(x, *y);
        found.push_back({pt, point_order(c, pt)});
        if (!y->is_zero()) {
            Point neg = negate(pt);
            found.push_back({neg, point_order(c, neg)});
        }
    }
    std::sort(found.begin(), found.end(),
              [](const FoundPoint& a, const FoundPoint& b) { return a.point < b.point; });
    return found;
}

}  // namespace dioquad
