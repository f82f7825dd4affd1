#pragma once

#include "dioquad/factor.hpp"
#include "dioquad/families.hpp"
#include "dioquad/rank.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dioquad {

/// name = from..to step s, or a single value name = x.
struct ParamRange {
    std::string name;
    Rat from;
    Rat to;
    Rat step = Rat(1);

    std::vector<Rat> values() const;
};

/// Comma-separated "name=value" pairs. Throws ParseError.
std::map<std::string, Rat> parse_param_values(std::string_view text);

/// Comma-separated "name=from..to step s" or "name=value". Throws ParseError
/// for bad syntax and std::invalid_argument for a non-positive step.
std::vector<ParamRange> parse_param_ranges(std::string_view text);

/// Checks that `values` names exactly the parameters of `family`.
FamilyParams make_family_params(Family family, std::map<std::string, Rat> values,
                                CMode c_mode = CMode::regular);

struct SweepOptions {
    Family family = Family::z2z2v;
    CMode c_mode = CMode::regular;
    std::vector<ParamRange> ranges;
    long sieve_N = 1000;
    std::size_t top = 10;
    unsigned jobs = 1;
    long search_bound = 0;  // 0 disables the point search
    FactorBudget budget;
};

struct SweepRow {
    std::size_t grid_index = 0;
    FamilyParams params;
    std::array<Rat, 4> quadruple;
    MestreNagaoSum score;
    RankBound bound;
    std::size_t non_torsion_witnesses = 0;
};

struct SweepResult {
    std::size_t grid_size = 0;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
    /// Highest S(N) first; ties keep grid order.
    std::vector<SweepRow> rows;
};

/// Cartesian product of the ranges in the family's canonical parameter
/// order; the last parameter varies fastest.
std::vector<FamilyParams> sweep_grid(const SweepOptions& opts);

/// Evaluates every grid point on `jobs` worker threads. Degenerate points are
/// counted and skipped. Output does not depend on `jobs`.
SweepResult run_sweep(const SweepOptions& opts);

}  // namespace dioquad
