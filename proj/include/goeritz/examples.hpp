#pragma once

#include <string>
#include <vector>

namespace goeritz {

/// Names of the built-in diagrams, sorted.
std::vector<std::string> example_names();

/// Source text of a built-in diagram; throws std::out_of_range for unknown names.
const std::string& example_source(const std::string& name);

bool has_example(const std::string& name);

}  // namespace goeritz
