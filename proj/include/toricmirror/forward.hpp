#pragma once

#include "toricmirror/laurent.hpp"
#include "toricmirror/report.hpp"
#include "toricmirror/toric.hpp"

#include <vector>

namespace tmir {

// Indices are 0-based into the characters D_1..D_R.
struct ConvexPartition {
    std::vector<std::size_t> B;
    std::vector<std::vector<std::size_t>> S;
    std::vector<std::size_t> U;
    std::vector<std::size_t> choices;  // s_i in S_i; empty means min(S_i)
};

// Checks: "partition", "basis", "omega", "nonempty", "nef", "effective".
Report validate_partition(const GitData& gd, const ConvexPartition& p);

// D_B^{-1} D: identity on the B columns.
IntMatrix normalised_weight_matrix(const GitData& gd, const std::vector<std::size_t>& B);

// l_{b,i} = sum_{j in S_i} m_{b,j}, rows indexed by position in B.
IntMatrix bundle_degrees(const GitData& gd, const ConvexPartition& p);

std::vector<std::size_t> resolved_choices(const ConvexPartition& p);

// Original indices of the Laurent variables: eliminated S_i indices (minus
// the choices) by (i, index), then U by index.
std::vector<std::size_t> forward_variables(const ConvexPartition& p);

Laurent przyjalkowski(const GitData& gd, const ConvexPartition& p);

}  // namespace tmir
