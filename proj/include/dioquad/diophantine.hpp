#pragma once

#include "dioquad/curve.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dioquad {

struct PairRoot {
    std::size_t i;
    std::size_t j;
    Rat root;  // nonnegative, root^2 = e[i] e[j] + 1
};

/// Outcome of a Diophantine tuple check: either every pairwise root, sorted
/// by (i, j), or the first failing pair and why. Pairs are scanned as each
/// element joins the tuple, nearest predecessor first, so 1,3,8,121 fails at
/// (8, 121).
struct TupleCheck {
    enum class Failure { none, too_short, zero_element, duplicate, not_square };

    bool ok = false;
    Failure failure = Failure::none;
    std::vector<PairRoot> roots;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    std::string reason;
};

/// Elements must be distinct and nonzero, and every product of two of them
/// plus 1 a rational square (0 included).
TupleCheck check_diophantine(std::span<const Rat> elems);

bool is_diophantine_tuple(std::span<const Rat> elems);

/// An ordered rational Diophantine quadruple (a, b, c, d); the induced curve
/// depends on the roles.
class Quadruple {
  public:
    /// Throws DegenerateError for zero or repeated elements and
    /// NotDiophantineError when a pairwise product plus 1 is not a square.
    static Quadruple make(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
    static Quadruple make(std::span<const Rat> elems);

    const Rat& a() const { return e_[0]; }
    const Rat& b() const { return e_[1]; }
    const Rat& c() const { return e_[2]; }
    const Rat& d() const { return e_[3]; }
    const std::array<Rat, 4>& elements() const { return e_; }

    /// Square roots of ab+1, ac+1, ad+1, bc+1, bd+1, cd+1 in that order.
    const std::array<Rat, 6>& roots() const { return roots_; }

    friend bool operator==(const Quadruple& x, const Quadruple& y) { return x.e_ == y.e_; }

  private:
    Quadruple() = default;

    std::array<Rat, 4> e_;
    std::array<Rat, 6> roots_;
};

/// The 24 role assignments of an unordered set, in lexicographic order of the
/// index permutation.
std::vector<Quadruple> orderings(const Quadruple& q);

struct InducedCurve {
    Curve curve;
    Point P;
    Point Q;
};

/// y^2 = x (x + (b-a)(d-c)) (x + (c-a)(d-b)) with
/// P = ((b-a)(c-a), (b-a)(c-a)(d-a)) and Q = ((ad+1)(bc+1), product of the six
/// pairwise roots). Throws DegenerateError when the curve is singular.
InducedCurve induced_curve(const Quadruple& q);

/// (a + b - c - d)^2 = 4 (ab + 1)(cd + 1).
bool is_regular_quadruple(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

/// Regularity for the pairings {ab|cd}, {ac|bd}, {ad|bc}.
std::array<bool, 3> regular_pairings(const Quadruple& q);

/// Image of X under (X, Y) -> (x, y) with x = (aX+1)(d-b)(d-c)/(dX+1) and
/// y = Y (d-a)(d-b)(d-c)/(dX+1)^2, Y the nonnegative root of
/// (aX+1)(bX+1)(cX+1)(dX+1). Throws DegenerateError at the pole dX + 1 = 0
/// and std::invalid_argument when the quartic value is not a square.
Point extension_point_forward(const Quadruple& q, const Rat& X);

/// X = (K - x)/(d x - a K), K = (d-b)(d-c); nullopt for O and at the pole.
std::optional<Rat> extension_point_inverse(const Quadruple& q, const Point& pt);

struct ExtensionCandidate {
    Point point;
    Rat X;
    std::array<bool, 4> squares{};  // aX+1, bX+1, cX+1, dX+1
    bool is_extension = false;
};

/// One entry per point whose inverse image is defined.
std::vector<ExtensionCandidate> quintuple_candidates(const Quadruple& q,
                                                     std::span<const Point> pts);

struct CombinationCandidate {
    long m;
    long n;
    ExtensionCandidate candidate;
};

/// Inverse images of m P + n Q for |m|, |n| <= depth, in (m, n) order.
std::vector<CombinationCandidate> extension_search(const Quadruple& q, long depth);

/// Comma-separated fraction tokens. Throws ParseError with a 1-based column.
std::vector<Rat> parse_tuple(std::string_view text);

/// One tuple per line; blank lines and lines starting with '#' are skipped.
/// ParseError carries the line and column.
struct TupleLine {
    std::size_t line;
    std::vector<Rat> elements;
};
std::vector<TupleLine> parse_tuple_file(std::string_view contents);

}  // namespace dioquad
