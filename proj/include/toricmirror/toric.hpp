#pragma once

#include "toricmirror/polyhedra.hpp"

#include <string>
#include <vector>

namespace tmir {

// Weight data of a toric GIT quotient C^R // (C*)^r.
struct GitData {
    std::size_t r = 0;
    std::vector<IntVec> characters;  // D_1..D_R, each of length r
    IntVec omega;

    std::size_t R() const { return characters.size(); }
    IntMatrix weight_matrix() const;  // r x R, columns D_i
};

void check_git_data(const GitData& gd);

// omega is a strictly positive combination of {D_i : i in I}.
bool covers(const GitData& gd, const std::vector<std::size_t>& I);
// Inclusion-minimal covering sets; the irrelevant collection is their
// up-closure. Requires omega off every wall.
std::vector<std::vector<std::size_t>> minimal_covering_sets(const GitData& gd);

struct StackyFan {
    Fan fan;                          // rays are the images rho_i, not necessarily primitive
    std::vector<std::string> cone_types;  // "smooth", "simplicial" or "neither" per max cone
};

StackyFan git_to_stacky_fan(const GitData& gd);
GitData stacky_fan_to_git(const Fan& fan);
std::vector<std::string> cone_types(const Fan& fan);

// Rational hyperplanes in L*_Q spanned by r-1 independent characters.
struct Wall {
    IntVec normal;                        // primitive normal of the hyperplane
    std::vector<std::size_t> characters;  // all D_i lying on it
};
std::vector<Wall> wall_hyperplanes(const GitData& gd);

struct SecondaryFan {
    Fan chambers;
    std::vector<Wall> walls;
};
SecondaryFan secondary_fan(const GitData& gd);
bool in_chamber_interior(const GitData& gd, const IntVec& omega);
// Closure of the chamber containing a generic omega.
Cone chamber_of(const GitData& gd, const IntVec& omega);

// ---- divisors on fans -----------------------------------------------------

// D = sum coeffs_i D_{rho_i}; phi_D(rho_i) = coeffs_i and
// P_D = {n : <rho_i, n> >= -coeffs_i}.
struct ToricDivisor {
    Fan fan;
    IntVec coeffs;
};

// Linear pieces of phi_D, one slope per maximal cone.
struct PLFunction {
    std::vector<RatVec> slopes;
};

PLFunction pl_function(const ToricDivisor& D);
bool is_nef(const ToricDivisor& D);
bool is_ample(const ToricDivisor& D);
Polytope sections_polytope(const ToricDivisor& D);

// Fan of P(L_0 + ... + L_a) over `base`; summands are coefficient vectors on
// the base rays. Ray order: lifted base rays, then fibre rays f_0..f_a.
Fan projective_bundle_fan(const Fan& base, const std::vector<IntVec>& summands);

}  // namespace tmir
