#pragma once

#include "dioquad/numeric.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dioquad {

struct NamedTuple {
    std::string name;
    std::vector<Rat> elements;
};

/// Contents of data/paper_tuples.txt, compiled in.
std::string_view paper_tuple_text();

/// The embedded tuples, named by the "# name: <id>" comment preceding each.
const std::vector<NamedTuple>& paper_tuples();

/// Throws std::out_of_range for an unknown name.
const NamedTuple& paper_tuple(std::string_view name);

}  // namespace dioquad
