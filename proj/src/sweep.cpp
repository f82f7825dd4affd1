#include "dioquad/sweep.hpp"

#include "dioquad/diophantine.hpp"
#include "dioquad/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

namespace dioquad {

namespace {

constexpr std::size_t kMaxGridSize = 1'000'000;

std::string_view trim(std::string_view s, std::size_t& offset) {
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

Rat parse_at(std::string_view token, std::size_t offset) {
    std::size_t lead = 0;
    token = trim(token, lead);
    try {
        return parse_rat(token);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), 0, offset + lead + std::max<std::size_t>(e.column(), 1));
    }
}

struct Assignment {
    std::string name;
    std::string_view value;
    std::size_t value_offset;  // 0-based position of value in the full text
};

std::vector<Assignment> split_assignments(std::string_view text) {
    std::vector<Assignment> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        std::size_t offset = start;
        const std::string_view item = trim(text.substr(start, end - start), offset);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw ParseError("expected name=value in '" + std::string(item) + "'", 0, offset + 1);
        }
        std::size_t name_offset = offset;
        std::string name(trim(item.substr(0, eq), name_offset));
        out.push_back({std::move(name), item.substr(eq + 1), offset + eq + 1});
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    std::set<std::string> seen;
    for (const auto& a : out) {
        if (!seen.insert(a.name).second) {
            throw ParseError("parameter '" + a.name + "' given twice", 0, a.value_offset);
        }
    }
    return out;
}

}  // namespace

std::vector<Rat> ParamRange::values() const {
    if (step.sign() <= 0) {
        throw std::invalid_argument("range step for '" + name + "' must be positive");
    }
    std::vector<Rat> out;
    for (Rat x = from; x <= to; x += step) {
        out.push_back(x);
        if (out.size() > kMaxGridSize) {
            throw std::invalid_argument("range for '" + name + "' is too large");
        }
    }
    return out;
}

std::map<std::string, Rat> parse_param_values(std::string_view text) {
    std::map<std::string, Rat> out;
    for (const auto& a : split_assignments(text)) {
        out.emplace(a.name, parse_at(a.value, a.value_offset));
    }
    return out;
}

std::vector<ParamRange> parse_param_ranges(std::string_view text) {
    std::vector<ParamRange> out;
    for (const auto& a : split_assignments(text)) {
        ParamRange r;
        r.name = a.name;
        const std::size_t dots = a.value.find("..");
        if (dots == std::string_view::npos) {
            r.from = r.to = parse_at(a.value, a.value_offset);
            out.push_back(std::move(r));
            continue;
        }
        r.from = parse_at(a.value.substr(0, dots), a.value_offset);
        std::string_view rest = a.value.substr(dots + 2);
        const std::size_t rest_offset = a.value_offset + dots + 2;
        const std::size_t step_pos = rest.find("step");
        if (step_pos == std::string_view::npos) {
            r.to = parse_at(rest, rest_offset);
        } else {
            r.to = parse_at(rest.substr(0, step_pos), rest_offset);
            r.step = parse_at(rest.substr(step_pos + 4), rest_offset + step_pos + 4);
        }
        if (r.step.sign() <= 0) {
            throw std::invalid_argument("range step for '" + r.name + "' must be positive");
        }
        out.push_back(std::move(r));
    }
    return out;
}

FamilyParams make_family_params(Family family, std::map<std::string, Rat> values, CMode c_mode) {
    const auto names = family_parameters(family);
    for (const auto& n : names) {
        if (values.find(n) == values.end()) {
            throw std::invalid_argument("family " + family_name(family) + " needs parameter '" +
                                        n + "'");
        }
    }
    for (const auto& [n, v] : values) {
        if (std::find(names.begin(), names.end(), n) == names.end()) {
            throw std::invalid_argument("family " + family_name(family) +
                                        " has no parameter '" + n + "'");
        }
    }
    return FamilyParams{family, std::move(values), c_mode};
}

std::vector<FamilyParams> sweep_grid(const SweepOptions& opts) {
    const auto names = family_parameters(opts.family);
    std::map<std::string, Rat> placeholder;
    for (const auto& r : opts.ranges) {
        placeholder.emplace(r.name, r.from);
    }
    make_family_params(opts.family, placeholder, opts.c_mode);

    std::vector<std::vector<Rat>> axes;
    std::size_t size = 1;
    for (const auto& n : names) {
        auto it = std::find_if(opts.ranges.begin(), opts.ranges.end(),
                               [&](const ParamRange& r) { return r.name == n; });
        axes.push_back(it->values());
        size *= axes.back().size();
        if (size > kMaxGridSize) {
            throw std::invalid_argument("sweep grid exceeds " + std::to_string(kMaxGridSize) +
                                        " points");
        }
    }
    if (size == 0) {
        throw std::invalid_argument("sweep grid is empty");
    }
    std::vector<FamilyParams> grid;
    grid.reserve(size);
    std::vector<std::size_t> idx(axes.size(), 0);
    for (std::size_t g = 0; g < size; ++g) {
        FamilyParams p{opts.family, {}, opts.c_mode};
        for (std::size_t i = 0; i < axes.size(); ++i) {
            p.values.emplace(names[i], axes[i][idx[i]]);
        }
        grid.push_back(std::move(p));
        for (std::size_t i = axes.size(); i-- > 0;) {
            if (++idx[i] < axes[i].size()) {
                break;
            }
            idx[i] = 0;
        }
    }
    return grid;
}

namespace {

std::optional<SweepRow> evaluate_point(const SweepOptions& opts, const FamilyParams& params,
                                       std::size_t index) {
    std::optional<FamilyOutput> out;
    try {
        out = evaluate_family(params);
    } catch (const DegenerateError&) {
        return std::nullopt;
    }
    const InducedCurve ic = induced_curve(out->quadruple);
    const IntegerModel model = integer_model(ic.curve);
    SweepRow row;
    row.grid_index = index;
    row.params = params;
    row.quadruple = out->quadruple.elements();
    row.score = mestre_nagao_sum(model, opts.sieve_N);
    row.bound = trivial_rank_bound(model, opts.budget);
    if (opts.search_bound > 0) {
        for (const auto& fp : naive_point_search(ic.curve, opts.search_bound)) {
            if (!fp.order.is_finite()) {
                ++row.non_torsion_witnesses;
            }
        }
    }
    return row;
}

}  // namespace

SweepResult run_sweep(const SweepOptions& opts) {
    if (opts.sieve_N < 2) {
        throw std::invalid_argument("sieve cutoff N must be at least 2");
    }
    const std::vector<FamilyParams> grid = sweep_grid(opts);
    std::vector<std::optional<SweepRow>> slots(grid.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                slots[i] = evaluate_point(opts, grid[i], i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, 256));
    {
        std::vector<std::jthread> pool;
        for (unsigned j = 1; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        worker();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    SweepResult result;
    result.grid_size = grid.size();
    std::vector<SweepRow> rows;
    for (auto& slot : slots) {
        if (slot) {
            rows.push_back(std::move(*slot));
        } else {
            ++result.skipped;
        }
    }
    result.evaluated = rows.size();
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return a.score.fixed > b.score.fixed;
    });
    if (rows.size() > opts.top) {
        rows.resize(opts.top);
    }
    result.rows = std::move(rows);
    return result;
}

}  // namespace dioquad
