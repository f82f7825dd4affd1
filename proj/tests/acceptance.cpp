// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include "dioquad/cli.hpp"
#include "dioquad/diophantine.hpp"
#include "dioquad/errors.hpp"
#include "dioquad/families.hpp"
#include "dioquad/fixtures.hpp"
#include "dioquad/rank.hpp"
#include "dioquad/torsion.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace dioquad;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

bool run_criterion(const char* id, const char* title, double limit_s,
                   const std::function<Verdict()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.pass && limit_s > 0 && secs > limit_s) {
        v.pass = false;
        v.detail = "exceeded the " + std::to_string(limit_s) + " s limit";
    }
    std::printf("%s %s  %s (%.2f s)%s%s\n", id, v.pass ? "PASS" : "FAIL", title, secs,
                v.detail.empty() ? "" : ": ", v.detail.c_str());
    std::fflush(stdout);
    return v.pass;
}

Rat draw(std::mt19937_64& g, std::int64_t h) { return Rat::from_mpq(oracle::draw_rational(g, h)); }

Quadruple fixture_quadruple(const char* name) { return Quadruple::make(paper_tuple(name).elements); }

std::array<Rat, 4> fixture4(const char* name) { return fixture_quadruple(name).elements(); }

/// Nondegenerate outputs of `family` at random parameters of height <= h.
std::vector<FamilyOutput> random_outputs(Family family, int count, std::mt19937_64& g,
                                         std::int64_t h, CMode mode = CMode::regular) {
    std::vector<FamilyOutput> out;
    while (static_cast<int>(out.size()) < count) {
        FamilyParams p{family, {}, mode};
        for (const auto& name : family_parameters(family)) {
            p.values.emplace(name, draw(g, h));
        }
        try {
            out.push_back(evaluate_family(p));
        } catch (const DegenerateError&) {
        }
    }
    return out;
}

std::string params_text(const FamilyParams& p) {
    std::string s;
    for (const auto& [k, v] : p.values) {
        s += (s.empty() ? "" : ",") + k + "=" + v.to_string();
    }
    return family_name(p.family) + "(" + s + ")";
}

std::vector<Quadruple> fixture_quadruples() {
    std::vector<Quadruple> out;
    for (const auto& t : paper_tuples()) {
        const auto& e = t.elements;
        const std::size_t n = e.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) {
                    for (std::size_t l = k + 1; l < n; ++l) {
                        out.push_back(Quadruple::make(e[i], e[j], e[k], e[l]));
                    }
                }
            }
        }
    }
    return out;
}

Verdict ac1() {
    Verdict v;
    int mutations = 0;
    for (const auto& t : paper_tuples()) {
        v.require(is_diophantine_tuple(t.elements), t.name + " is not Diophantine");
        for (int m = 1; m <= 10; ++m) {
            std::vector<Rat> e = t.elements;
            const std::size_t i = static_cast<std::size_t>(m - 1) % e.size();
            if (m % 2 == 1) {
                e[i] += Rat(Int(m), Int(7));
            } else {
                e[i] *= Rat(Int(m + 1), Int(m));
            }
            v.require(!is_diophantine_tuple(e), t.name + " mutation " + std::to_string(m) +
                                                    " still passes");
            ++mutations;
        }
    }
    v.require(paper_tuples().size() == 14, "expected 14 fixtures");
    if (v.pass) {
        v.detail = std::to_string(paper_tuples().size()) + " fixtures pass, " +
                   std::to_string(mutations) + " mutations fail";
    }
    return v;
}

Verdict ac2() {
    Verdict v;
    v.require(family_z2z2_v(parse_rat("142/53"), parse_rat("142/23")).quadruple.elements() ==
                  fixture4("z2z2-rank10-a"),
              "z2z2v(142/53,142/23)");
    v.require(family_z2z2_v(parse_rat("59/4"), parse_rat("59/34")).quadruple.elements() ==
                  fixture4("z2z2-rank10-b"),
              "z2z2v(59/4,59/34)");
    v.require(family_z2z6(Rat(23)).quadruple.elements() == fixture4("z2z6-rank3-a"), "z2z6(23)");
    v.require(family_z2z6(parse_rat("-22/13")).quadruple.elements() == fixture4("z2z6-rank3-b"),
              "z2z6(-22/13)");
    if (v.pass) {
        v.detail = "4 ordered quadruples reproduced";
    }
    return v;
}

Verdict ac3() {
    Verdict v;
    const std::vector<std::pair<const char*, int>> expected{
        {"z2z8-rank3", 4},   {"z2z6-rank3-a", 3},  {"z2z6-rank3-b", 3},  {"z2z4-rank6-a", 2},
        {"z2z4-rank6-b", 2}, {"z2z2-rank10-a", 1}, {"z2z2-rank10-b", 1},
    };
    std::string gcds;
    for (const auto& [name, k] : expected) {
        const Curve c = induced_curve(fixture_quadruple(name)).curve;
        const TorsionClass tc = torsion_group(c);
        v.require(tc.k == k, std::string(name) + " classified as " + tc.name());
        if (tc.witness) {
            v.require(point_order(c, *tc.witness).finite == 2 * k,
                      std::string(name) + " witness has the wrong order");
        }
        const std::int64_t g = torsion_order_bound(c, 10);
        v.require(g % (4 * k) == 0, std::string(name) + ": 4k does not divide " +
                                        std::to_string(g));
        gcds += (gcds.empty() ? "" : " ") + std::to_string(g);
    }
    if (v.pass) {
        v.detail = "7 curves, mod-p gcds " + gcds;
    }
    return v;
}

Verdict ac4() {
    Verdict v;
    std::mt19937_64 g(kSeed);
    const Family families[] = {Family::z2z2, Family::z2z2v, Family::z2z4, Family::z2z6,
                               Family::z2z8};
    for (Family f : families) {
        for (const FamilyOutput& out : random_outputs(f, 100, g, 12)) {
            const std::string where = params_text(out.params);
            const Quadruple& q = out.quadruple;
            v.require(is_diophantine_tuple(q.elements()), where + " not Diophantine");
            if (f == Family::z2z4 || f == Family::z2z8) {
                v.require(q.a() * q.d() == Rat(-1), where + ": ad != -1");
            }
            if (f == Family::z2z4 || f == Family::z2z6 || f == Family::z2z8) {
                const int k = torsion_group(induced_curve(q).curve).k;
                if (f == Family::z2z4) {
                    v.require(k == 2 || k == 4, where + ": torsion lacks Z/2xZ/4");
                } else {
                    v.require(k == out.advertised_k, where + ": torsion Z/2xZ/" +
                                                         std::to_string(2 * k));
                }
            }
        }
    }
    if (v.pass) {
        v.detail = "500 draws (100 per family)";
    }
    return v;
}

Verdict ac5() {
    Verdict v;
    std::vector<Quadruple> qs = fixture_quadruples();
    const std::size_t n_fixture = qs.size();
    std::mt19937_64 g(kSeed + 5);
    for (Family f : {Family::z2z2, Family::z2z2v, Family::z2z4, Family::z2z6, Family::z2z8}) {
        for (auto& out : random_outputs(f, 20, g, 12)) {
            qs.push_back(out.quadruple);
        }
    }
    for (const Quadruple& q : qs) {
        const Rat &a = q.a(), &b = q.b(), &c = q.c(), &d = q.d();
        const InducedCurve ic = induced_curve(q);
        const auto sq = in_double_subgroup(ic.curve, ic.Q);
        std::string where;
        for (const Rat& x : q.elements()) {
            where += (where.empty() ? "" : ",") + x.to_string();
        }
        v.require(sq.has_value(), "Q not in 2E(Q) for " + where);
        if (sq) {
            v.require(sq->alpha * sq->alpha == (a * d + Rat(1)) * (b * c + Rat(1)) &&
                          sq->beta * sq->beta == (a * c + Rat(1)) * (b * d + Rat(1)) &&
                          sq->gamma * sq->gamma == (a * b + Rat(1)) * (c * d + Rat(1)),
                      "square mismatch for " + where);
        }
    }
    if (v.pass) {
        v.detail = std::to_string(n_fixture) + " fixture quadruples and " +
                   std::to_string(qs.size() - n_fixture) + " family outputs";
    }
    return v;
}

Verdict ac6() {
    Verdict v;
    std::mt19937_64 g(kSeed + 6);
    int done = 0;
    while (done < 50) {
        const Rat u = draw(g, 15), w = draw(g, 15);
        std::optional<FamilyOutput> out;
        std::optional<Curve> tform;
        try {
            out = family_z2z8(u, w);
            tform = t_form_curve(z2z8_T(u, w));
        } catch (const DegenerateError&) {
            continue;
        }
        v.require(j_invariant(induced_curve(out->quadruple).curve) == j_invariant(*tform),
                  "j differs at u=" + u.to_string() + ", v=" + w.to_string());
        ++done;
    }
    if (v.pass) {
        v.detail = "50 (u,v) draws";
    }
    return v;
}

Verdict ac7() {
    Verdict v;
    const IntegerModel m = integer_model(induced_curve(fixture_quadruple("z2z2-rank10-a")).curve);
    const RankBound rb = trivial_rank_bound(m);
    v.require(rb.bound >= 10 && !rb.incomplete,
              "trivial bound " + std::to_string(rb.bound) + (rb.incomplete ? " (incomplete)" : ""));

    constexpr long kSearchBound = 100;
    const Curve fermat = induced_curve(fixture_quadruple("fermat")).curve;
    std::size_t non_torsion = 0;
    for (const auto& fp : naive_point_search(fermat, kSearchBound)) {
        non_torsion += fp.order.is_finite() ? 0 : 1;
    }
    v.require(non_torsion >= 1, "no non-torsion point with height <= 100");

    const auto sweep = [](const char* jobs) {
        std::ostringstream out, err;
        const int code = run_cli({"sweep", "--name", "z2z2v", "--params",
                                  "t=2..11, v=3/2..21/2", "--sieve-N", "1000", "--top", "100",
                                  "--jobs", jobs, "--json"},
                                 out, err);
        return std::make_pair(code, out.str());
    };
    const auto one = sweep("1");
    const auto eight = sweep("8");
    v.require(one.first == 0 && eight.first == 0, "sweep failed");
    v.require(one.second == eight.second, "1-way and 8-way sweep output differ");
    v.require(one.second.find("\"grid_size\": 100") != std::string::npos, "grid is not 100 points");
    if (v.pass) {
        v.detail = "bound " + std::to_string(rb.bound) + " complete; " +
                   std::to_string(non_torsion) + " non-torsion points at height <= " +
                   std::to_string(kSearchBound) + "; sweep output identical (" +
                   std::to_string(one.second.size()) + " bytes)";
    }
    return v;
}

Verdict ac8() {
    Verdict v;
    std::mt19937_64 g(kSeed + 8);
    int curves = 0, counts = 0;
    while (curves < 20) {
        const mpq_class p1 = oracle::draw_rational(g, 1000), p2 = oracle::draw_rational(g, 1000);
        if (p1 == p2) {
            continue;
        }
        const Curve c = Curve::make(Rat::from_mpq(p1), Rat::from_mpq(p2));
        for (long p : primes_up_to(200)) {
            if (p == 2 || !has_good_reduction(c, p)) {
                continue;
            }
            const std::int64_t n = count_points_mod_p(c, p);
            const std::int64_t ref =
                oracle::count_points_legendre(oracle::reduce(p1 + p2, p), oracle::reduce(p1 * p2, p), p);
            v.require(n == ref, "count mismatch at p=" + std::to_string(p));
            const std::int64_t ap = p + 1 - n;
            v.require(ap * ap <= 4 * p, "Hasse bound fails at p=" + std::to_string(p));
            ++counts;
        }
        ++curves;
    }

    int trials = 0, criterion = 0, halves = 0;
    while (trials < 500) {
        const mpq_class x0 = oracle::draw_rational(g, 30), p1 = oracle::draw_rational(g, 30),
                        y0 = oracle::draw_rational(g, 30);
        if (x0 + p1 == 0) {
            continue;
        }
        const mpq_class p2 = y0 * y0 / (x0 * (x0 + p1)) - x0;
        if (p2 == 0 || p2 == p1) {
            continue;
        }
        const Curve c = Curve::make(Rat::from_mpq(p1), Rat::from_mpq(p2));
        const Point R(Rat::from_mpq(x0), Rat::from_mpq(y0));
        const Point Q = trials % 2 == 0 ? dbl(c, R) : R;
        if (Q.is_infinity()) {
            continue;
        }
        ++trials;
        const bool passes = in_double_subgroup(c, Q).has_value();
        const auto hs = halve_point(c, Q);
        v.require(passes == !hs.empty(), "square criterion and halving disagree");
        if (!passes) {
            continue;
        }
        ++criterion;
        v.require(hs.size() == 4, "expected four halves");
        std::set<mpq_class> xs;
        for (const Point& h : hs) {
            v.require(on_curve(c, h) && dbl(c, h) == Q, "2R != Q for a returned half");
            xs.insert(h.x().mpq());
            ++halves;
        }
        v.require(xs == oracle::closed_form_half_x(Q.x().mpq(), p1, p2),
                  "halves differ from the closed form");
    }
    if (v.pass) {
        v.detail = std::to_string(counts) + " point counts on 20 curves; " +
                   std::to_string(criterion) + "/500 halving trials pass the criterion, " +
                   std::to_string(halves) + " halves verified";
    }
    return v;
}

Verdict ac9() {
    Verdict v;
    const Quadruple q = fixture_quadruple("fermat");
    const Rat X = parse_rat("777480/8288641");
    const Point pt = extension_point_forward(q, X);
    v.require(on_curve(induced_curve(q).curve, pt), "image point is off the curve");
    const std::array<Point, 1> one{pt};
    const auto cands = quintuple_candidates(q, one);
    v.require(cands.size() == 1 && cands[0].X == X && cands[0].is_extension,
              "X not marked as an extension");
    if (v.pass) {
        v.detail = "X -> " + pt.to_string();
    }
    return v;
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run_criterion("AC1", "tuple fixtures and mutations", 5, ac1);
    ok &= run_criterion("AC2", "family reproduction", 1, ac2);
    ok &= run_criterion("AC3", "torsion classification", 30, ac3);
    ok &= run_criterion("AC4", "family torsion properties", 300, ac4);
    ok &= run_criterion("AC5", "Q in 2E(Q) squares", 0, ac5);
    ok &= run_criterion("AC6", "j-invariant coincidence", 0, ac6);
    ok &= run_criterion("AC7", "rank proxies", 0, ac7);
    ok &= run_criterion("AC8", "point counts and halving oracles", 0, ac8);
    ok &= run_criterion("AC9", "Euler extension", 1, ac9);
    std::cout << (ok ? "all criteria pass" : "some criteria fail") << '\n';
    return ok ? 0 : 1;
}
