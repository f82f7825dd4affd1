#include "dioquad/fixtures.hpp"

#include "dioquad/diophantine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dioquad {

namespace detail {
extern const std::string_view kPaperTupleText;
}

std::string_view paper_tuple_text() { return detail::kPaperTupleText; }

namespace {

std::vector<NamedTuple> load() {
    const std::string_view text = paper_tuple_text();
    constexpr std::string_view marker = "# name: ";
    std::map<std::size_t, std::string> names;  // keyed by the line they name
    std::size_t line = 1;
    for (std::size_t pos = 0; pos < text.size(); ++line) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view l = text.substr(pos, end - pos);
        if (l.starts_with(marker)) {
            names.emplace(line + 1, l.substr(marker.size()));
        }
        pos = end + 1;
    }
    std::vector<NamedTuple> out;
    for (auto& tl : parse_tuple_file(text)) {
        auto it = names.find(tl.line);
        if (it == names.end()) {
            throw std::logic_error("embedded fixture file: tuple on line " +
                                   std::to_string(tl.line) + " has no name comment");
        }
        out.push_back({it->second, std::move(tl.elements)});
    }
    return out;
}

}  // namespace

const std::vector<NamedTuple>& paper_tuples() {
    static const std::vector<NamedTuple> tuples = load();
    return tuples;
}

const NamedTuple& paper_tuple(std::string_view name) {
    for (const auto& t : paper_tuples()) {
        if (t.name == name) {
            return t;
        }
    }
    throw std::out_of_range("no fixture tuple named '" + std::string(name) + "'");
}

}  // namespace dioquad
