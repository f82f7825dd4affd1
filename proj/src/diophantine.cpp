#include "dioquad/diophantine.hpp"

#include "dioquad/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioquad {

TupleCheck check_diophantine(std::span<const Rat> elems) {
    TupleCheck out;
    if (elems.size() < 2) {
        out.failure = TupleCheck::Failure::too_short;
        out.reason = "a tuple needs at least two elements";
        return out;
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].is_zero()) {
            out.failure = TupleCheck::Failure::zero_element;
            out.failing_pair = std::make_pair(i, i);
            out.reason = "element " + std::to_string(i) + " is zero";
            return out;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (elems[i] == elems[j]) {
                out.failure = TupleCheck::Failure::duplicate;
                out.failing_pair = std::make_pair(j, i);
                out.reason = "elements " + std::to_string(j) + " and " + std::to_string(i) +
                             " coincide";
                return out;
            }
        }
    }
    for (std::size_t j = 1; j < elems.size(); ++j) {
        for (std::size_t i = j; i-- > 0;) {
            const Rat v = elems[i] * elems[j] + Rat(1);
            auto r = perfect_square(v);
            if (!r) {
                out.roots.clear();
                out.failure = TupleCheck::Failure::not_square;
                out.failing_pair = std::make_pair(i, j);
                out.reason = elems[i].to_string() + "*" + elems[j].to_string() +
                             "+1 = " + v.to_string() + " is not a square";
                return out;
            }
            out.roots.push_back({i, j, *r});
        }
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const PairRoot& x, const PairRoot& y) {
        return std::pair(x.i, x.j) < std::pair(y.i, y.j);
    });
    out.ok = true;
    return out;
}

bool is_diophantine_tuple(std::span<const Rat> elems) { return check_diophantine(elems).ok; }

Quadruple Quadruple::make(std::span<const Rat> elems) {
    if (elems.size() != 4) {
        throw NotDiophantineError("expected four elements, got " + std::to_string(elems.size()));
    }
    const TupleCheck check = check_diophantine(elems);
    if (check.failure == TupleCheck::Failure::duplicate ||
        check.failure == TupleCheck::Failure::zero_element) {
        static const char* const names[] = {"a", "b", "c", "d"};
        const auto [i, j] = *check.failing_pair;
        const std::string factor =
            i == j ? names[i] : std::string(names[i]) + "-" + names[j];
        throw DegenerateError(factor, "degenerate quadruple: " + check.reason);
    }
    if (!check.ok) {
        throw NotDiophantineError("not a rational Diophantine quadruple: " + check.reason);
    }
    Quadruple q;
    std::copy(elems.begin(), elems.end(), q.e_.begin());
    for (std::size_t k = 0; k < 6; ++k) {
        q.roots_[k] = check.roots[k].root;
    }
    return q;
}

Quadruple Quadruple::make(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    const std::array<Rat, 4> e{a, b, c, d};
    return make(e);
}

std::vector<Quadruple> orderings(const Quadruple& q) {
    std::array<std::size_t, 4> idx{0, 1, 2, 3};
    std::vector<Quadruple> out;
    do {
        const std::array<Rat, 4> e{q.elements()[idx[0]], q.elements()[idx[1]],
                                   q.elements()[idx[2]], q.elements()[idx[3]]};
        out.push_back(Quadruple::make(e));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

InducedCurve induced_curve(const Quadruple& q) {
    const Rat &a = q.a(), &b = q.b(), &c = q.c(), &d = q.d();
    Curve curve = Curve::make((b - a) * (d - c), (c - a) * (d - b));
    const Rat px = (b - a) * (c - a);
    Point P(px, px * (d - a));
    Rat qy(1);
    for (const Rat& r : q.roots()) {
        qy *= r;
    }
    Point Q((a * d + Rat(1)) * (b * c + Rat(1)), qy);
    if (!on_curve(curve, P) || !on_curve(curve, Q)) {
        throw std::logic_error("induced curve points failed the membership check");
    }
    return InducedCurve{std::move(curve), std::move(P), std::move(Q)};
}

bool is_regular_quadruple(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    const Rat s = a + b - c - d;
    return s * s == Rat(4) * (a * b + Rat(1)) * (c * d + Rat(1));
}

std::array<bool, 3> regular_pairings(const Quadruple& q) {
    const Rat &a = q.a(), &b = q.b(), &c = q.c(), &d = q.d();
    return {is_regular_quadruple(a, b, c, d), is_regular_quadruple(a, c, b, d),
            is_regular_quadruple(a, d, b, c)};
}

Point extension_point_forward(const Quadruple& q, const Rat& X) {
    const Rat &a = q.a(), &b = q.b(), &c = q.c(), &d = q.d();
    const Rat dx1 = d * X + Rat(1);
    if (dx1.is_zero()) {
        throw DegenerateError("dX+1", "extension map pole: dX + 1 = 0");
    }
    const Rat quartic = (a * X + Rat(1)) * (b * X + Rat(1)) * (c * X + Rat(1)) * dx1;
    auto Y = perfect_square(quartic);
    if (!Y) {
        throw std::invalid_argument("(aX+1)(bX+1)(cX+1)(dX+1) = " + quartic.to_string() +
                                    " is not a square");
    }
    const Rat K = (d - b) * (d - c);
    return Point((a * X + Rat(1)) * K / dx1, *Y * (d - a) * K / (dx1 * dx1));
}

std::optional<Rat> extension_point_inverse(const Quadruple& q, const Point& pt) {
    if (pt.is_infinity()) {
        return std::nullopt;
    }
    const Rat K = (q.d() - q.b()) * (q.d() - q.c());
    const Rat den = q.d() * pt.x() - q.a() * K;
    if (den.is_zero()) {
        return std::nullopt;
    }
    return (K - pt.x()) / den;
}

std::vector<ExtensionCandidate> quintuple_candidates(const Quadruple& q,
                                                     std::span<const Point> pts) {
    std::vector<ExtensionCandidate> out;
    for (const Point& pt : pts) {
        auto X = extension_point_inverse(q, pt);
        if (!X) {
            continue;
        }
        ExtensionCandidate cand{pt, *X, {}, false};
        bool all = true;
        for (std::size_t i = 0; i < 4; ++i) {
            cand.squares[i] = perfect_square(q.elements()[i] * *X + Rat(1)).has_value();
            all = all && cand.squares[i];
        }
        const bool fresh = !X->is_zero() && std::find(q.elements().begin(), q.elements().end(),
                                                      *X) == q.elements().end();
        cand.is_extension = all && fresh;
        out.push_back(std::move(cand));
    }
    return out;
}

std::vector<CombinationCandidate> extension_search(const Quadruple& q, long depth) {
    if (depth < 0) {
        throw std::invalid_argument("extension_search: negative depth");
    }
    const InducedCurve ic = induced_curve(q);
    std::vector<Point> multiples_q;
    for (long n = -depth; n <= depth; ++n) {
        multiples_q.push_back(detail::mul_unchecked(ic.curve, n, ic.Q));
    }
    std::vector<CombinationCandidate> out;
    for (long m = -depth; m <= depth; ++m) {
        const Point mp = detail::mul_unchecked(ic.curve, m, ic.P);
        for (long n = -depth; n <= depth; ++n) {
            const Point pt =
                detail::add_unchecked(ic.curve, mp, multiples_q[static_cast<std::size_t>(n + depth)]);
            const std::array<Point, 1> one{pt};
            for (auto& cand : quintuple_candidates(q, one)) {
                out.push_back({m, n, std::move(cand)});
            }
        }
    }
    return out;
}

std::vector<Rat> parse_tuple(std::string_view text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view token =
            text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        try {
            out.push_back(parse_rat(token));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), 0, start + std::max<std::size_t>(e.column(), 1));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::vector<TupleLine> parse_tuple_file(std::string_view contents) {
    std::vector<TupleLine> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= contents.size()) {
        const std::size_t nl = contents.find('\n', pos);
        std::string_view line =
            contents.substr(pos, nl == std::string_view::npos ? contents.npos : nl - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!line.empty() && line.front() != '#') {
            try {
                out.push_back({line_no, parse_tuple(line)});
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ", column " +
                                     std::to_string(e.column()) + ": " + e.what(),
                                 line_no, e.column());
            }
        }
        if (nl == std::string_view::npos) {
            break;
        }
        pos = nl + 1;
    }
    return out;
}

}  // namespace dioquad
