#include "dioquad/report.hpp"

#include <algorithm>
#include <vector>

namespace dioquad::report {

using json = nlohmann::ordered_json;

json rat(const Rat& q) { return q.to_string(); }

json rats(std::span<const Rat> qs) {
    json arr = json::array();
    for (const Rat& q : qs) {
        arr.push_back(q.to_string());
    }
    return arr;
}

json params(const FamilyParams& p) {
    json obj = json::object();
    for (const auto& [name, value] : p.values) {
        obj[name] = value.to_string();
    }
    return obj;
}

json verify_entry(const std::string& source, std::span<const Rat> tuple, const TupleCheck& check) {
    json j = {{"source", source}, {"tuple", rats(tuple)}, {"diophantine", check.ok}};
    if (check.ok) {
        json roots = json::array();
        for (const auto& r : check.roots) {
            roots.push_back({{"pair", {r.i, r.j}}, {"root", r.root.to_string()}});
        }
        j["roots"] = std::move(roots);
    } else {
        if (check.failing_pair) {
            const auto [i, k] = *check.failing_pair;
            j["failing_pair"] = {i, k};
            j["failing_elements"] = {tuple[i].to_string(), tuple[k].to_string()};
        }
        j["reason"] = check.reason;
    }
    return j;
}

json induce(const Quadruple& q, const InducedCurve& ic) {
    const IntegerModel m = integer_model(ic.curve);
    static const char* const pair_names[] = {"ab", "ac", "ad", "bc", "bd", "cd"};
    json roots = json::object();
    for (std::size_t i = 0; i < 6; ++i) {
        roots[pair_names[i]] = q.roots()[i].to_string();
    }
    const auto reg = regular_pairings(q);
    return {
        {"command", "induce"},
        {"tuple", rats(q.elements())},
        {"p1", rat(ic.curve.p1())},
        {"p2", rat(ic.curve.p2())},
        {"A", rat(ic.curve.A())},
        {"B", rat(ic.curve.B())},
        {"integer_model", {{"A", m.A.get_str()}, {"B", m.B.get_str()}, {"scale", m.scale.get_str()}}},
        {"j_invariant", rat(j_invariant(ic.curve))},
        {"P", ic.P.to_string()},
        {"Q", ic.Q.to_string()},
        {"square_roots", roots},
        {"d_is_minus_inverse_a", (q.a() * q.d() + Rat(1)).is_zero()},
        {"regular", {{"ab|cd", reg[0]}, {"ac|bd", reg[1]}, {"ad|bc", reg[2]}}},
    };
}

json torsion(const Curve& c, const TorsionClass& tc, std::int64_t mod_p_gcd, int primes) {
    json j = {
        {"command", "torsion"},
        {"curve", {{"p1", rat(c.p1())}, {"p2", rat(c.p2())}}},
        {"torsion", tc.name()},
        {"k", tc.k},
        {"order", tc.order()},
        {"witness", tc.witness ? json(tc.witness->to_string()) : json(nullptr)},
        {"witness_order", tc.witness ? json(2 * tc.k) : json(nullptr)},
        {"mod_p_gcd", mod_p_gcd},
        {"primes", primes},
        {"consistent", mod_p_gcd % tc.order() == 0},
    };
    return j;
}

json family(const FamilyOutput& out, const TupleCheck& check,
            const std::optional<TorsionClass>& torsion) {
    json j = {
        {"command", "family"},
        {"family", family_name(out.params.family)},
        {"params", params(out.params)},
        {"quadruple", rats(out.quadruple.elements())},
        {"advertised_torsion", TorsionClass{out.advertised_k, std::nullopt}.name()},
        {"diophantine", check.ok},
        {"d_is_minus_inverse_a",
         (out.quadruple.a() * out.quadruple.d() + Rat(1)).is_zero()},
    };
    if (out.params.family == Family::z2z4) {
        j["c_mode"] = c_mode_name(out.params.c_mode);
    }
    if (out.params.family == Family::z2z8) {
        j["T"] = rat(z2z8_T(out.params.at("u"), out.params.at("v")));
    }
    if (torsion) {
        const bool holds = out.advertised_k == 2 ? (torsion->k == 2 || torsion->k == 4)
                                                 : torsion->k == out.advertised_k;
        j["torsion"] = torsion->name();
        j["witness"] = torsion->witness ? json(torsion->witness->to_string()) : json(nullptr);
        j["advertised_holds"] = holds;
    }
    return j;
}

json sweep(const SweepOptions& opts, const SweepResult& result) {
    json rows = json::array();
    std::size_t rank = 0;
    for (const auto& r : result.rows) {
        rows.push_back({
            {"rank", ++rank},
            {"grid_index", r.grid_index},
            {"params", params(r.params)},
            {"quadruple", rats(r.quadruple)},
            {"S_N", r.score.decimal()},
            {"bad_primes", r.score.bad_primes},
            {"trivial_bound", r.bound.bound},
            {"bound_incomplete", r.bound.incomplete},
            {"non_torsion_witnesses", r.non_torsion_witnesses},
        });
    }
    json j = {
        {"command", "sweep"},
        {"family", family_name(opts.family)},
        {"sieve_N", opts.sieve_N},
        {"S_N_digits", kScoreDigits},
        {"search_bound", opts.search_bound},
        {"grid_size", result.grid_size},
        {"evaluated", result.evaluated},
        {"skipped", result.skipped},
        {"rows", std::move(rows)},
    };
    if (opts.family == Family::z2z4) {
        j["c_mode"] = c_mode_name(opts.c_mode);
    }
    return j;
}

json extend(const Quadruple& q, long depth, std::span<const CombinationCandidate> candidates) {
    json list = json::array();
    std::vector<std::string> extensions;
    for (const auto& c : candidates) {
        list.push_back({
            {"m", c.m},
            {"n", c.n},
            {"point", c.candidate.point.to_string()},
            {"X", rat(c.candidate.X)},
            {"squares", c.candidate.squares},
            {"is_extension", c.candidate.is_extension},
        });
        const std::string x = c.candidate.X.to_string();
        if (c.candidate.is_extension &&
            std::find(extensions.begin(), extensions.end(), x) == extensions.end()) {
            extensions.push_back(x);
        }
    }
    return {
        {"command", "extend"},
        {"tuple", rats(q.elements())},
        {"depth", depth},
        {"candidates", std::move(list)},
        {"extensions", extensions},
    };
}

void sweep_csv(std::ostream& os, const SweepOptions& opts, const SweepResult& result) {
    const auto names = family_parameters(opts.family);
    os << "rank,grid_index";
    for (const auto& n : names) {
        os << ',' << n;
    }
    os << ",sieve_N,S_N,trivial_bound,bound_incomplete,non_torsion_witnesses,search_bound\n";
    std::size_t rank = 0;
    for (const auto& r : result.rows) {
        os << ++rank << ',' << r.grid_index;
        for (const auto& n : names) {
            os << ',' << r.params.at(n);
        }
        os << ',' << opts.sieve_N << ',' << r.score.decimal() << ',' << r.bound.bound << ','
           << (r.bound.incomplete ? "true" : "false") << ',' << r.non_torsion_witnesses << ','
           << opts.search_bound << '\n';
    }
}

namespace {

void flatten(const json& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
    if (node.is_object()) {
        for (const auto& [k, v] : node.items()) {
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        }
        return;
    }
    if (node.is_array()) {
        const bool scalars = std::all_of(node.begin(), node.end(),
                                         [](const json& e) { return e.is_primitive(); });
        if (scalars) {
            std::string joined;
            for (const auto& e : node) {
                joined += (joined.empty() ? "" : " ") + (e.is_string() ? e.get<std::string>()
                                                                       : e.dump());
            }
            out.emplace_back(prefix, joined.empty() ? "-" : joined);
            return;
        }
        std::size_t i = 0;
        for (const auto& e : node) {
            flatten(e, prefix + "[" + std::to_string(i++) + "]", out);
        }
        return;
    }
    out.emplace_back(prefix, node.is_string() ? node.get<std::string>() : node.dump());
}

}  // namespace

void print_table(std::ostream& os, const json& doc) {
    std::vector<std::pair<std::string, std::string>> lines;
    flatten(doc, "", lines);
    std::size_t width = 0;
    for (const auto& [k, v] : lines) {
        width = std::max(width, k.size());
    }
    for (const auto& [k, v] : lines) {
        os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    }
}

}  // namespace dioquad::report
