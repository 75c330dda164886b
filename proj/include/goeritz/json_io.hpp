#pragma once

#include "goeritz/colorings.hpp"
#include "goeritz/diagram.hpp"
#include "goeritz/shading.hpp"

#include <json.hpp>

namespace goeritz {

using ordered_json = nlohmann::ordered_json;

/// Exact integers render as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that.
ordered_json json_int(const Int& x);

ordered_json json_report(const ValidationReport& rep, const Diagram& d);
ordered_json json_group(const FgAbelianGroup& g);
ordered_json json_goeritz(const Diagram& d, const Shading& s, const GoeritzMatrix& g);
ordered_json json_coloring_report(const ColoringReport& rep);
ordered_json json_verify(const VerifyReport& rep, const std::string& subject);

}  // namespace goeritz
