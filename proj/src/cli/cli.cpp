#include "dioquad/cli.hpp"

#include "dioquad/diophantine.hpp"
#include "dioquad/errors.hpp"
#include "dioquad/families.hpp"
#include "dioquad/fixtures.hpp"
#include "dioquad/report.hpp"
#include "dioquad/sweep.hpp"
#include "dioquad/torsion.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace dioquad {

namespace {

using json = nlohmann::ordered_json;

struct Output {
    bool json = false;
    bool csv = false;
};

void print_rows(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        width.resize(std::max(width.size(), r.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            width[i] = std::max(width[i], r[i].size());
        }
    }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) {
                line += std::string(width[i] - r[i].size() + 2, ' ');
            }
        }
        os << line << '\n';
    }
}

std::string join(const json& arr, const char* sep = " ") {
    std::string s;
    for (const auto& e : arr) {
        s += (s.empty() ? "" : sep) + (e.is_string() ? e.get<std::string>() : e.dump());
    }
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Rat> tuple_arg(const std::string& text) {
    try {
        return parse_tuple(text);
    } catch (const ParseError& e) {
        throw ParseError(std::string("--tuple: ") + e.what() + " (column " +
                             std::to_string(e.column()) + ")",
                         e.line(), e.column());
    }
}

Quadruple quadruple_arg(const std::string& text) {
    const auto elems = tuple_arg(text);
    return Quadruple::make(elems);
}

int cmd_verify(std::ostream& os, const Output& mode, const std::string& file,
               const std::string& tuple, bool fixtures) {
    std::vector<std::pair<std::string, std::vector<Rat>>> inputs;
    if (!tuple.empty()) {
        inputs.emplace_back("tuple", tuple_arg(tuple));
    } else if (fixtures) {
        for (const auto& nt : paper_tuples()) {
            inputs.emplace_back(nt.name, nt.elements);
        }
    } else {
        for (auto& tl : parse_tuple_file(read_file(file))) {
            inputs.emplace_back(file + ":" + std::to_string(tl.line), std::move(tl.elements));
        }
    }
    json results = json::array();
    std::size_t passed = 0;
    for (const auto& [source, elems] : inputs) {
        const TupleCheck check = check_diophantine(elems);
        passed += check.ok ? 1 : 0;
        results.push_back(report::verify_entry(source, elems, check));
    }
    const bool all = passed == inputs.size();
    if (mode.json) {
        os << json{{"command", "verify"},
                   {"results", results},
                   {"passed", passed},
                   {"failed", inputs.size() - passed},
                   {"all_pass", all}}
                  .dump(2)
           << '\n';
    } else {
        std::vector<std::vector<std::string>> rows{{"source", "verdict", "tuple", "detail"}};
        for (const auto& r : results) {
            std::string detail = "-";
            if (!r["diophantine"].get<bool>()) {
                detail = r["reason"].get<std::string>();
                if (r.contains("failing_elements") &&
                    r["failing_pair"][0] != r["failing_pair"][1]) {
                    detail = "pair (" + join(r["failing_elements"], ",") + "): " + detail;
                }
            }
            rows.push_back({r["source"].get<std::string>(),
                            r["diophantine"].get<bool>() ? "pass" : "fail",
                            join(r["tuple"], ","), detail});
        }
        print_rows(os, rows);
        os << passed << "/" << inputs.size() << " passed\n";
    }
    return all ? kExitOk : kExitVerificationFailed;
}

int cmd_induce(std::ostream& os, const Output& mode, const std::string& tuple) {
    const Quadruple q = quadruple_arg(tuple);
    const json doc = report::induce(q, induced_curve(q));
    if (mode.json) {
        os << doc.dump(2) << '\n';
    } else {
        report::print_table(os, doc);
    }
    return kExitOk;
}

int cmd_torsion(std::ostream& os, const Output& mode, const std::string& tuple,
                const std::string& p1, const std::string& p2, int primes) {
    std::optional<Curve> curve;
    if (!tuple.empty()) {
        curve = induced_curve(quadruple_arg(tuple)).curve;
    } else {
        curve = Curve::make(parse_rat(p1), parse_rat(p2));
    }
    const TorsionClass tc = torsion_group(*curve);
    const std::int64_t g = torsion_order_bound(*curve, primes);
    json doc = report::torsion(*curve, tc, g, primes);
    if (!tuple.empty()) {
        doc["tuple"] = report::rats(tuple_arg(tuple));
    }
    if (mode.json) {
        os << doc.dump(2) << '\n';
    } else {
        report::print_table(os, doc);
    }
    return doc["consistent"].get<bool>() ? kExitOk : kExitVerificationFailed;
}

int cmd_family(std::ostream& os, const Output& mode, const std::string& name,
               const std::string& params, const std::string& c_mode, bool check_torsion) {
    const Family family = parse_family(name);
    if (!c_mode.empty() && family != Family::z2z4) {
        throw std::invalid_argument("--c-mode applies only to z2z4");
    }
    const CMode cm = c_mode.empty() ? CMode::regular : parse_c_mode(c_mode);
    const FamilyParams fp = make_family_params(family, parse_param_values(params), cm);
    const FamilyOutput out = evaluate_family(fp);
    const TupleCheck check = check_diophantine(out.quadruple.elements());
    std::optional<TorsionClass> tc;
    if (check_torsion) {
        tc = torsion_group(induced_curve(out.quadruple).curve);
    }
    const json doc = report::family(out, check, tc);
    if (mode.json) {
        os << doc.dump(2) << '\n';
    } else {
        report::print_table(os, doc);
    }
    const bool holds = !doc.contains("advertised_holds") || doc["advertised_holds"].get<bool>();
    return check.ok && holds ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(std::ostream& os, const Output& mode, SweepOptions opts, const std::string& name,
              const std::string& ranges, const std::string& c_mode) {
    opts.family = parse_family(name);
    if (!c_mode.empty() && opts.family != Family::z2z4) {
        throw std::invalid_argument("--c-mode applies only to z2z4");
    }
    opts.c_mode = c_mode.empty() ? CMode::regular : parse_c_mode(c_mode);
    opts.ranges = parse_param_ranges(ranges);
    const SweepResult result = run_sweep(opts);
    if (mode.json) {
        os << report::sweep(opts, result).dump(2) << '\n';
    } else if (mode.csv) {
        report::sweep_csv(os, opts, result);
    } else {
        const auto names = family_parameters(opts.family);
        std::vector<std::string> header{"rank"};
        header.insert(header.end(), names.begin(), names.end());
        header.insert(header.end(), {"S(N)", "bound", "witnesses", "quadruple"});
        std::vector<std::vector<std::string>> rows{header};
        std::size_t rank = 0;
        for (const auto& r : result.rows) {
            std::vector<std::string> row{std::to_string(++rank)};
            for (const auto& n : names) {
                row.push_back(r.params.at(n).to_string());
            }
            row.push_back(r.score.decimal());
            row.push_back(std::to_string(r.bound.bound) + (r.bound.incomplete ? "+" : ""));
            row.push_back(opts.search_bound > 0 ? std::to_string(r.non_torsion_witnesses) : "-");
            row.push_back(join(report::rats(r.quadruple), ","));
            rows.push_back(std::move(row));
        }
        os << "family " << family_name(opts.family) << ", N=" << opts.sieve_N << ", grid "
           << result.grid_size << ", evaluated " << result.evaluated << ", skipped "
           << result.skipped << '\n';
        print_rows(os, rows);
    }
    return kExitOk;
}

int cmd_extend(std::ostream& os, const Output& mode, const std::string& tuple, long depth) {
    const Quadruple q = quadruple_arg(tuple);
    const auto candidates = extension_search(q, depth);
    const json doc = report::extend(q, depth, candidates);
    if (mode.json) {
        os << doc.dump(2) << '\n';
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows{{"m", "n", "X", "aX+1", "bX+1", "cX+1", "dX+1",
                                                "extension"}};
    for (const auto& c : candidates) {
        std::vector<std::string> row{std::to_string(c.m), std::to_string(c.n),
                                     c.candidate.X.to_string()};
        for (bool sq : c.candidate.squares) {
            row.push_back(sq ? "square" : "-");
        }
        row.push_back(c.candidate.is_extension ? "yes" : "no");
        rows.push_back(std::move(row));
    }
    print_rows(os, rows);
    os << "extensions: " << (doc["extensions"].empty() ? "none" : join(doc["extensions"]))
       << '\n';
    return kExitOk;
}

void report_error(std::ostream& out, std::ostream& err, bool as_json, const std::string& kind,
                  const std::string& message, json extra = json::object()) {
    if (as_json) {
        extra["kind"] = kind;
        extra["message"] = message;
        out << json{{"error", extra}}.dump(2) << '\n';
    }
    err << "error: " << message << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational Diophantine quadruples and their induced elliptic curves", "dioquad"};
    app.require_subcommand(1);
    std::string output_path;
    app.add_option("-o,--output", output_path, "Write the report to a file");

    Output mode;
    std::string file, tuple, p1, p2, name, params, c_mode;
    bool fixtures = false, check_torsion = false;
    int primes = 10;
    long depth = 0;
    SweepOptions sweep;

    auto* verify = app.add_subcommand("verify", "Check Diophantine tuples");
    auto* v_file = verify->add_option("--file", file, "Tuple file, one tuple per line");
    auto* v_tuple = verify->add_option("--tuple", tuple, "Comma-separated fractions");
    auto* v_fix = verify->add_flag("--fixtures", fixtures, "The embedded published tuples");
    v_file->excludes(v_tuple, v_fix);
    v_tuple->excludes(v_fix);
    verify->add_flag("--json", mode.json);

    auto* induce = app.add_subcommand("induce", "Induced curve of a quadruple");
    induce->add_option("--tuple", tuple)->required();
    induce->add_flag("--json", mode.json);

    auto* torsion = app.add_subcommand("torsion", "Torsion subgroup of an induced curve");
    auto* t_tuple = torsion->add_option("--tuple", tuple);
    auto* t_p1 = torsion->add_option("--p1", p1);
    auto* t_p2 = torsion->add_option("--p2", p2);
    t_p1->needs(t_p2);
    t_p2->needs(t_p1);
    t_tuple->excludes(t_p1, t_p2);
    torsion->add_option("--primes", primes, "Good odd primes in the mod-p cross-check")
        ->check(CLI::Range(2, 10000));
    torsion->add_flag("--json", mode.json);

    auto* family = app.add_subcommand("family", "Evaluate a parametric family");
    family->add_option("--name", name, "z2z2, z2z2v, z2z4, z2z6 or z2z8")->required();
    family->add_option("--params", params, "e.g. u=2,v=1/2")->required();
    family->add_option("--c-mode", c_mode, "z2z4 only: regular or prop3");
    family->add_flag("--check-torsion", check_torsion);
    family->add_flag("--json", mode.json);

    auto* sw = app.add_subcommand("sweep", "Rank sieve over a parameter grid");
    sw->add_option("--name", name)->required();
    sw->add_option("--params", params, "e.g. t=1..3 step 1/2, v=2")->required();
    sw->add_option("--sieve-N", sweep.sieve_N)->required()->check(CLI::Range(2L, 10'000'000L));
    sw->add_option("--top", sweep.top)->required();
    sw->add_option("--jobs", sweep.jobs)->check(CLI::Range(1U, 256U));
    sw->add_option("--search-bound", sweep.search_bound, "Naive point search height, 0 = off")
        ->check(CLI::Range(0L, 1'000'000L));
    sw->add_option("--c-mode", c_mode);
    auto* s_json = sw->add_flag("--json", mode.json);
    auto* s_csv = sw->add_flag("--csv", mode.csv);
    s_json->excludes(s_csv);

    auto* extend = app.add_subcommand("extend", "Quintuple candidates from m P + n Q");
    extend->add_option("--tuple", tuple)->required();
    extend->add_option("--depth", depth)->required()->check(CLI::Range(0L, 64L));
    extend->add_flag("--json", mode.json);

    std::vector<std::string> argv_store{"dioquad"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (verify->parsed() && file.empty() && tuple.empty() && !fixtures) {
            throw CLI::RequiredError("verify needs --file, --tuple or --fixtures");
        }
        if (torsion->parsed() && tuple.empty() && p1.empty()) {
            throw CLI::RequiredError("torsion needs --tuple or --p1 and --p2");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ofstream file_out;
    if (!output_path.empty()) {
        file_out.open(output_path, std::ios::binary);
        if (!file_out) {
            err << "error: cannot write '" << output_path << "'\n";
            return kExitUsage;
        }
    }
    std::ostream& os = output_path.empty() ? out : file_out;

    try {
        if (verify->parsed()) {
            return cmd_verify(os, mode, file, tuple, fixtures);
        }
        if (induce->parsed()) {
            return cmd_induce(os, mode, tuple);
        }
        if (torsion->parsed()) {
            return cmd_torsion(os, mode, tuple, p1, p2, primes);
        }
        if (family->parsed()) {
            return cmd_family(os, mode, name, params, c_mode, check_torsion);
        }
        if (sw->parsed()) {
            return cmd_sweep(os, mode, sweep, name, params, c_mode);
        }
        return cmd_extend(os, mode, tuple, depth);
    } catch (const ParseError& e) {
        json loc = json::object();
        if (e.line() > 0) {
            loc["line"] = e.line();
        }
        if (e.column() > 0) {
            loc["column"] = e.column();
        }
        report_error(os, err, mode.json, "parse", e.what(), loc);
        return kExitUsage;
    } catch (const DegenerateError& e) {
        report_error(os, err, mode.json, "degenerate", e.what(), {{"factor", e.factor()}});
        return kExitDegenerate;
    } catch (const NotDiophantineError& e) {
        report_error(os, err, mode.json, "not_diophantine", e.what());
        return kExitVerificationFailed;
    } catch (const std::invalid_argument& e) {
        report_error(os, err, mode.json, "usage", e.what());
        return kExitUsage;
    }
}

}  // namespace dioquad
