#pragma once

#include "toricmirror/inversion.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tmir {

// ---- mutations ------------------------------------------------------------

struct MutationData {
    IntVec weight;   // w in M
    Polytope factor; // F in w-perp, inside N
};

// {x in P : <w, x> = h}
Polytope slice(const Polytope& P, const IntVec& w, const Int& h);

// Integer levels h: slice + h F for h >= 0; for h < 0 the slice must be
// (erosion) + |h| F exactly. Throws "not_mutable" naming the level.
Polytope mutate_polytope(const Polytope& P, const MutationData& m);

// Piecewise linear action on M: m -> m - min_{f in F} <m, f> w.
RatVec mutate_dual_point(const RatVec& m, const MutationData& m_data);

// Weight and factor live in Mbar + 0 and Nbar + 0.
Scaffolding mutate_scaffolding(const Scaffolding& S, const MutationData& m);

// ---- nef partitions -------------------------------------------------------

struct NefPartitionResult {
    Report report;                 // "reflexive", "integral", "nef", "minkowski", "points"
    std::vector<Polytope> nablas;  // sections polytopes of D_i
    std::vector<RatVec> points;    // p_i with sum zero, when found
};
// parts: vertex lists of Delta. Throws "inconsistent_pl" when some phi_i is
// not piecewise linear on the spanning fan.
NefPartitionResult check_nef_partition(const Polytope& Delta, const std::vector<std::vector<IntVec>>& parts);

struct FanoNefPartition {
    Fan fan;
    std::vector<std::vector<std::size_t>> E;
    std::vector<std::size_t> F;
};
// Checks "partition", "ample_F", "nef_E", "gorenstein_cone".
Report check_fano_nef_partition(const FanoNefPartition& fnp);
// Fan of Y from an inversion; E_i = rays of the i-th factor of a product
// shape (or all shape rays otherwise), F = strut rays.
FanoNefPartition fano_nef_partition_from_inversion(const Scaffolding& S, const InversionResult& inv);

// ---- Cayley constructions ---------------------------------------------------

struct Cayley {
    Polytope polytope;
    Cone cone;
};
Cayley cayley(const std::vector<Polytope>& polys);
// r P is reflexive after translation, measured in its affine lattice.
bool is_gorenstein_of_index(const Polytope& P, unsigned r);

// Class map Div(Z) -> Pic(Z): factor indicators on product shapes, a kernel
// basis of the ray relations otherwise.
IntMatrix picard_class_map(const Fan& shape);

Polytope p_tilde(const Scaffolding& S, const std::vector<IntVec>& R);
// R = -[D_s] in Pic(Z); the uneliminated part of the lattice is untouched.
Polytope p_tilde_canonical(const Scaffolding& S);
// Hull of the canonical polytope and the Pic basis points.
Polytope p_tilde_one(const Scaffolding& S);
// Laurent polynomial on p_tilde_one for product shapes: z^{r_s} times the
// strut polynomial, plus the Pic variables.
Laurent p_tilde_one_laurent(const Scaffolding& S);

Polytope p_s_polytope(const Scaffolding& S);

struct MutationChain {
    Polytope start;   // p_tilde_one transported into Ntilde
    Polytope result;
    Polytope p_s;
    bool isomorphic = false;
};
MutationChain mutation_chain(const Scaffolding& S);
bool mutation_chain_check(const Scaffolding& S);

// ---- amenable collections ---------------------------------------------------

// Rays rho_1..rho_R in the distinguished basis {rho_j : j not in B}.
std::vector<IntVec> distinguished_rays(const GitData& gd, const std::vector<std::size_t>& B);

// Checks "own_block", "earlier_blocks", "later_blocks".
Report validate_amenable(const GitData& gd, const ConvexPartition& p, const std::vector<IntVec>& W);

// Iterated projective bundles; rays grouped by S_1, ..., S_k (sorted).
Fan tower_from_amenable(const GitData& gd, const ConvexPartition& p, const std::vector<IntVec>& W);
// Same fan read off from the ray relations alpha_{i,j} = -<w_i, rho_j>.
Fan tower_from_relations(const GitData& gd, const ConvexPartition& p, const std::vector<IntVec>& W);

// One binomial per w_i over the R Cox variables: prod_{S_i} x_j - prod x_j^{<w_i, rho_j>}.
std::vector<Binomial> amenable_binomials(const GitData& gd, const ConvexPartition& p, const std::vector<IntVec>& W);

Scaffolding scaffolding_from_tower(const GitData& gd, const ConvexPartition& p, const std::vector<IntVec>& W);

// ---- mutability of struts ---------------------------------------------------

struct MutabilityEntry {
    std::size_t strut = 0;
    std::size_t weight = 0;
    bool ok = false;
    std::string detail;
};
// 2D only: factor is the primitive segment in w-perp.
std::vector<MutabilityEntry> strut_mutability(const Scaffolding& S, const std::vector<IntVec>& weights);

}  // namespace tmir
