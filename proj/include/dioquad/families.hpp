#pragma once

#include "dioquad/diophantine.hpp"
#include "dioquad/numeric.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dioquad {

enum class Family { z2z2, z2z2v, z2z4, z2z6, z2z8 };

/// How z2z4 chooses the fourth element: from the regularity equation, or the
/// closed form 8(d-a-b)(a+d-b)(b+d-a)/(a^2+b^2+d^2-2ab-2ad-2bd)^2.
enum class CMode { regular, prop3 };

std::string family_name(Family f);
/// Throws std::invalid_argument for unknown names.
Family parse_family(const std::string& name);
/// Parameter names in canonical order, e.g. {"t", "v"} for z2z2v.
std::vector<std::string> family_parameters(Family f);
/// k of the advertised Z/2 x Z/2k.
int advertised_k(Family f);

std::string c_mode_name(CMode m);
CMode parse_c_mode(const std::string& name);

struct FamilyParams {
    Family family = Family::z2z2;
    std::map<std::string, Rat> values;
    CMode c_mode = CMode::regular;

    /// Throws std::invalid_argument when the parameter is missing.
    const Rat& at(const std::string& name) const;
};

struct FamilyOutput {
    Quadruple quadruple;
    FamilyParams params;
    int advertised_k = 1;
};

/// Regular-triple construction b, c, d from (t, a). Degenerate parameters
/// raise DegenerateError naming the vanishing factor.
FamilyOutput family_z2z2(const Rat& t, const Rat& a);
/// family_z2z2(t, (v^2 - 1)/(2v)).
FamilyOutput family_z2z2_v(const Rat& t, const Rat& v);

struct CurveCoefficients {
    Rat A1;
    Rat B1;
};
/// A1 and B1 of the equivalent model y^2 = x^3 + A1 x^2 + B1 x.
CurveCoefficients z2z2_curve_coeffs(const Rat& t, const Rat& a);
/// The eight quadratic-in-t factors whose product is B1, as
/// (coefficient of t^2, coefficient of t, constant).
std::vector<std::array<Rat, 3>> z2z2_b1_factors(const Rat& a);

/// Quadruple with d = -1/a.
FamilyOutput family_z2z4(const Rat& t, const Rat& u, CMode mode = CMode::regular);

/// Intermediate symbols of the Z/2 x Z/6 derivation, evaluated from k.
struct Z2z6Chain {
    Rat t1, t2, t3, m;
    std::array<Rat, 4> elements;  // Lasic a, b, c and the regular d
};
Z2z6Chain z2z6_chain(const Rat& k);
FamilyOutput family_z2z6(const Rat& k);

FamilyOutput family_z2z8(const Rat& u, const Rat& v);
/// T = v/(vu - u^2 - 1), the parameter of the Z/2 x Z/8 normal form with the
/// same j-invariant.
Rat z2z8_T(const Rat& u, const Rat& v);

/// Dispatch on params.family.
FamilyOutput evaluate_family(const FamilyParams& params);

}  // namespace dioquad
