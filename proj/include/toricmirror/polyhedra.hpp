#pragma once

#include "toricmirror/exact.hpp"

#include <optional>
#include <vector>

namespace tmir {

// <normal, x> >= offset
struct Halfspace {
    IntVec normal;
    Rat offset;
    bool operator==(const Halfspace&) const = default;
};

// <normal, x> == offset
struct Hyperplane {
    IntVec normal;
    Rat offset;
    bool operator==(const Hyperplane&) const = default;
};

// Generators of {x : A x >= 0, E x = 0}. Rays lie in the orthogonal
// complement of the lineality space, so the output is canonical.
struct ConeGenerators {
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
};
ConeGenerators cone_generators(std::size_t dim, const std::vector<IntVec>& inequalities,
                               const std::vector<IntVec>& equations = {});

// Polyhedral cone carrying both representations.
struct Cone {
    std::size_t ambient_dim = 0;
    std::vector<IntVec> rays;       // primitive, sorted
    std::vector<IntVec> lineality;  // HNF basis
    std::vector<IntVec> facets;     // inner normals, primitive, sorted
    std::vector<IntVec> equations;  // HNF basis of the orthogonal complement of the span

    std::size_t dim() const { return ambient_dim - equations.size(); }
    bool contains(const RatVec& x) const;
    bool contains(const IntVec& x) const { return contains(to_rat(x)); }
    bool contains_in_relative_interior(const RatVec& x) const;
    bool pointed() const { return lineality.empty(); }
    bool operator==(const Cone& o) const {
        return ambient_dim == o.ambient_dim && rays == o.rays && lineality == o.lineality;
    }
};

Cone cone_from_generators(std::size_t dim, const std::vector<IntVec>& rays,
                          const std::vector<IntVec>& lineality = {});
Cone cone_from_inequalities(std::size_t dim, const std::vector<IntVec>& inequalities,
                            const std::vector<IntVec>& equations = {});
Cone intersect(const Cone& a, const Cone& b);
// {y : B y in C} for an integer matrix B whose columns span the sublattice.
Cone pullback(const Cone& c, const IntMatrix& B);

class Polytope {
public:
    std::size_t ambient_dim = 0;
    std::vector<RatVec> vertices;        // sorted lexicographically
    std::vector<Halfspace> facets;       // irredundant, sorted
    std::vector<Hyperplane> equations;   // affine hull, HNF-canonical

    bool empty() const { return vertices.empty(); }
    // Affine dimension; -1 for the empty polytope.
    int dim() const {
        return empty() ? -1 : static_cast<int>(ambient_dim) - static_cast<int>(equations.size());
    }
    bool full_dimensional() const { return !empty() && equations.empty(); }
    bool contains(const RatVec& x) const;
    bool contains(const IntVec& x) const { return contains(to_rat(x)); }
    bool contains_in_relative_interior(const RatVec& x) const;
    bool is_lattice() const;
    bool operator==(const Polytope& o) const {
        return ambient_dim == o.ambient_dim && vertices == o.vertices;
    }
};

Polytope convex_hull(const std::vector<RatVec>& points, std::size_t ambient_dim);
Polytope convex_hull(const std::vector<IntVec>& points, std::size_t ambient_dim);
// Bounded polyhedron from an H-representation; empty result allowed.
Polytope polytope_from_halfspaces(std::size_t ambient_dim, const std::vector<Halfspace>& halfspaces,
                                  const std::vector<Hyperplane>& equations = {});
Halfspace make_halfspace(const RatVec& normal, const Rat& offset);

Polytope dual_polytope(const Polytope& P);
bool is_fano(const Polytope& P);
bool origin_in_interior(const Polytope& P);
std::vector<IntVec> integral_points(const Polytope& P);
std::vector<IntVec> interior_integral_points(const Polytope& P);
std::vector<IntVec> boundary_integral_points(const Polytope& P);

Polytope minkowski_sum(const Polytope& P, const Polytope& Q);
struct Erosion {
    std::optional<Polytope> result;  // absent when empty
    bool exact = false;              // result + Q == P
};
Erosion minkowski_difference(const Polytope& P, const Polytope& Q);
Polytope translate(const Polytope& P, const RatVec& t);
Polytope dilate(const Polytope& P, const Rat& k);
Polytope linear_image(const Polytope& P, const IntMatrix& U);

// Faces as vertex index sets (into P.vertices), including vertices and
// facets but excluding the empty face and P itself.
std::vector<std::vector<std::size_t>> proper_faces(const Polytope& P);

// Integer coordinates of P inside its affine lattice (origin at `base`).
// Returns the lattice basis used and the transformed polytope.
struct AffineLatticeChart {
    RatVec base;
    std::vector<IntVec> basis;
    Polytope polytope;
};
AffineLatticeChart affine_lattice_chart(const Polytope& P, const RatVec& base);

Cone cone_over(const Polytope& P, const Int& height = 1);

// ---- fans -----------------------------------------------------------------

struct Fan {
    std::size_t dim = 0;
    std::vector<IntVec> rays;                        // generators (primitive unless stacky)
    std::vector<std::vector<std::size_t>> max_cones;  // sorted ray index sets

    Cone cone(std::size_t i) const;
    std::vector<IntVec> cone_rays(std::size_t i) const;
};

Fan canonical(const Fan& F);
bool fans_equal(const Fan& F, const Fan& G);
Fan spanning_fan(const Polytope& P);
Fan normal_fan(const Polytope& P);
Fan restrict_fan(const Fan& F, const IntMatrix& sublattice_basis);
bool is_simplicial_cone(const Fan& F, std::size_t i);
bool is_smooth_cone(const Fan& F, std::size_t i);
// Full-dimensional pure fan whose every codimension-one face lies in exactly
// two maximal cones.
bool is_complete(const Fan& F);
// Pairs of maximal cones sharing a codimension-one face.
std::vector<std::pair<std::size_t, std::size_t>> adjacent_cones(const Fan& F);

std::optional<IntMatrix> lattice_isomorphic(const Polytope& P, const Polytope& Q);
std::optional<IntMatrix> fans_isomorphic(const Fan& F, const Fan& G);

}  // namespace tmir
