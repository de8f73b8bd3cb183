#pragma once

#include "toricmirror/json_io.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tmir::cli {

using io::json;

struct CommandOptions {
    std::optional<IntVec> omega;  // stability override
    unsigned max_degree = 10;
    bool drop_constant = false;
};

// Subcommand names with the input keys each one reads.
const std::vector<std::pair<std::string, std::vector<std::string>>>& command_table();

// inputs maps an input key ("f", "scaffolding", "git", "polytope", "mutation",
// "input") to a JSON document; fixture files are accepted wherever the bare
// object is. Throws DomainError; kind "unknown_command" and "malformed_input"
// are usage errors.
json run_command(const std::string& name, const std::map<std::string, json>& inputs, const CommandOptions& opts = {});

// Checks a fixture against its "expected" block and recomputes its mirror
// data; one named check per property.
json check_fixture(const json& fixture);

}  // namespace tmir::cli
