#pragma once

#include "toricmirror/scaffolding.hpp"

#include <optional>
#include <vector>

namespace tmir {

// Ambient GIT data recovered from a scaffolding. Columns are ordered:
// divisor struts, uneliminated basis struts, shape rays. Coordinates on
// Ntilde = Div(Z) + N_U put the shape divisors first.
struct InversionResult {
    IntMatrix matrix;  // r x R, identity on the first r columns
    IntVec omega;
    GitData git;
    std::vector<std::size_t> row_struts;
    std::vector<std::size_t> basis_struts;
    std::vector<IntVec> rays;  // rho_1..rho_R in Ntilde
    std::optional<ConvexPartition> recovered_partition;
};

InversionResult laurent_inversion(const Scaffolding& S, const std::optional<IntVec>& omega = std::nullopt);

// rho_s = (-D, chi in strut-basis coordinates) for every strut, in Ntilde.
std::vector<IntVec> ambient_strut_rays(const Scaffolding& S);

// theta : N -> Ntilde, (nbar, n_U) -> ((<rho_j, nbar>)_j, n_U in strut basis).
IntMatrix embedding_lattice_map(const Scaffolding& S);

struct Binomial {
    IntVec positive;
    IntVec negative;
    bool operator==(const Binomial&) const = default;
};

struct BinomialEquations {
    std::vector<IntVec> relations;     // lattice basis of {w : sum_j w_j rho_j = 0}
    std::vector<Binomial> torus;       // x^{w+} = x^{w-} in the shape-divisor variables
    std::vector<Binomial> homogeneous; // over the R Cox variables of Y
    std::vector<IntVec> wall_relations;  // relations across codimension-one walls of the shape
    std::vector<Binomial> wall_torus;
};
BinomialEquations binomial_equations(const Scaffolding& S);

Binomial split_by_sign(const IntVec& v);

// {u : <u, e_i> >= 0 on shape divisors, <u, rho_s> >= -1 on all struts}.
Polytope q_s_polytope(const Scaffolding& S);

// Checks "all_rays", "restriction", "good_cones". Failing details name struts
// or faces.
Report verify_embedding(const Scaffolding& S);

struct CIData {
    std::vector<std::vector<std::size_t>> groups;  // shape ray indices per factor
    std::vector<IntVec> functionals;               // u_j in Mtilde
    bool lattice_equal = false;                    // common kernel equals theta(N)
    IntMatrix degrees;                             // l_{b,i}, one row per divisor strut
};
CIData ci_data(const Scaffolding& S);

Scaffolding anticanonical_scaffolding(const Polytope& P);

}  // namespace tmir
