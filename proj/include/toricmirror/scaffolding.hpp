#pragma once

#include "toricmirror/forward.hpp"
#include "toricmirror/report.hpp"
#include "toricmirror/toric.hpp"

#include <optional>
#include <vector>

namespace tmir {

// A strut (D, chi): nef divisor on the shape plus a translation in N_U.
struct Strut {
    IntVec coeffs;
    IntVec chi;
    bool operator==(const Strut&) const = default;
};

// N = Nbar + N_U with Nbar dual to the shape's lattice. Points of N are
// written (nbar, n_U).
struct Scaffolding {
    Fan shape;
    std::size_t u = 0;
    std::vector<Strut> struts;
    Polytope target;

    std::size_t dim_bar() const { return shape.dim; }
    std::size_t dim() const { return shape.dim + u; }
};

ToricDivisor strut_divisor(const Scaffolding& S, std::size_t s);
// P_D x {chi} inside N.
Polytope strut_polytope(const Scaffolding& S, std::size_t s);
Polytope struts_hull(const Scaffolding& S);

// Struts (0, e) whose translations form a basis of N_U, and the remaining
// (divisor) struts. chi_inverse maps N_U coordinates to coordinates in that
// basis.
struct StrutSplit {
    std::vector<std::size_t> divisor_struts;
    std::vector<std::size_t> basis_struts;
    IntMatrix chi_inverse;
};
std::optional<StrutSplit> split_struts(const Scaffolding& S);

struct ScaffoldingReport {
    Report report;  // "shape", "well_formed", "nef", "target_fano", "hull", "uneliminated_basis"
    std::vector<std::size_t> struts_missing_vertices;
};
ScaffoldingReport scaffolding_report(const Scaffolding& S);
bool validate_scaffolding(const Scaffolding& S);

// C_s = {(m, z) : <m, n> + z >= 0 for n in the strut}, in M + Q.
Cone strut_cone(const Scaffolding& S, std::size_t s);

struct DualConeResult {
    bool preconditions = false;  // shape complete, struts nef, target Fano, uneliminated basis
    bool equal = false;
    Cone intersection;
    Cone expected;
};
DualConeResult dual_cone_result(const Scaffolding& S);
bool dual_cone_check(const Scaffolding& S);

// Fan of P^{d_1} x ... x P^{d_k}; factor i contributes e_1..e_{d_i} then
// minus their sum.
Fan projective_space_product(const std::vector<std::size_t>& dims);
// Ray index groups when the fan is a product of projective-space fans.
std::optional<std::vector<std::vector<std::size_t>>> product_factors(const Fan& F);

Scaffolding scaffolding_from_forward(const GitData& gd, const ConvexPartition& p);
// Multinomial-weighted polynomial of one strut, supported on the strut.
Laurent strut_laurent(const Scaffolding& S, std::size_t s);
Laurent laurent_from_scaffolding(const Scaffolding& S);

}  // namespace tmir
