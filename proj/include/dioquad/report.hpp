#pragma once

#include "dioquad/diophantine.hpp"
#include "dioquad/families.hpp"
#include "dioquad/rank.hpp"
#include "dioquad/sweep.hpp"
#include "dioquad/torsion.hpp"

#include <json.hpp>

#include <ostream>
#include <span>
#include <string>

namespace dioquad::report {

// Every rational is serialized as an exact "n/d" string.

nlohmann::ordered_json rat(const Rat& q);
nlohmann::ordered_json rats(std::span<const Rat> qs);
nlohmann::ordered_json params(const FamilyParams& p);

nlohmann::ordered_json verify_entry(const std::string& source, std::span<const Rat> tuple,
                            const TupleCheck& check);
nlohmann::ordered_json induce(const Quadruple& q, const InducedCurve& ic);
nlohmann::ordered_json torsion(const Curve& c, const TorsionClass& tc, std::int64_t mod_p_gcd,
                       int primes);
nlohmann::ordered_json family(const FamilyOutput& out, const TupleCheck& check,
                      const std::optional<TorsionClass>& torsion);
nlohmann::ordered_json sweep(const SweepOptions& opts, const SweepResult& result);
nlohmann::ordered_json extend(const Quadruple& q, long depth,
                      std::span<const CombinationCandidate> candidates);

/// Header plus one line per row; fields never contain commas.
void sweep_csv(std::ostream& os, const SweepOptions& opts, const SweepResult& result);

/// Aligned "key  value" lines for human-readable output; nested objects are
/// flattened with dotted keys and arrays of scalars joined with spaces.
void print_table(std::ostream& os, const nlohmann::ordered_json& doc);

}  // namespace dioquad::report
