#pragma once

#include "toricmirror/extensions.hpp"

#include "json.hpp"

#include <string>

namespace tmir::io {

using json = nlohmann::ordered_json;

// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are numbers when integral and "p/q" strings otherwise.
json to_json(const Int& v);
json to_json(const Rat& v);
json to_json(const IntVec& v);
json to_json(const RatVec& v);
json to_json(const IntMatrix& m);

Int int_from_json(const json& j);
Rat rat_from_json(const json& j);
IntVec intvec_from_json(const json& j);
RatVec ratvec_from_json(const json& j);
std::vector<IntVec> intvecs_from_json(const json& j);
IntMatrix intmatrix_from_json(const json& j);

// {"characters": [[...], ...]} or {"weights": r x R rows}, plus "omega".
GitData git_from_json(const json& j);
json to_json(const GitData& gd);

// Character indices are 1-based in JSON: {"B", "S", "U", "choices"}.
ConvexPartition partition_from_json(const json& j);
json to_json(const ConvexPartition& p);

// {"dim", "rays", "max_cones"}; cone entries are 0-based ray indices.
Fan fan_from_json(const json& j);
json to_json(const Fan& F);

// {"vertices": [...]} (any point set; the hull is taken).
Polytope polytope_from_json(const json& j, std::size_t ambient_dim_hint = 0);
json to_json(const Polytope& P);
json to_json(const Cone& C);

// {"shape", "u", "struts": [{"coeffs", "chi"}], "target"}; a missing target
// defaults to the hull of the struts.
Scaffolding scaffolding_from_json(const json& j);
json to_json(const Scaffolding& S);

// Either an expression string such as "(1+x)^2/(x*y)" with "vars", or
// {"vars", "terms": [{"exp", "coeff"}]}.
Laurent laurent_from_json(const json& j);
Laurent parse_laurent(const std::string& text, const std::vector<std::string>& vars);
json to_json(const Laurent& f);

json to_json(const Report& r);
json to_json(const InversionResult& inv);
json to_json(const Binomial& b);

// {"w": [...], "factor": polytope}; "factor_laurent" optionally gives the
// polynomial factor used by algebraic mutation.
MutationData mutation_from_json(const json& j, std::size_t ambient_dim);

// Returns j[key] when present, otherwise j itself, so that a fixture file and
// a bare object are both accepted.
const json& section(const json& j, const std::string& key);

}  // namespace tmir::io
