#include "doctest.h"
#include "support.hpp"

using namespace tmir;
using namespace tmir::test;

namespace {

Polytope hull(std::vector<IntVec> pts) { return convex_hull(pts, pts.front().size()); }

MutationData segment(const IntVec& w, const IntVec& e) { return {w, hull({IntVec(e.size(), Int(0)), e})}; }

}  // namespace

TEST_SUITE("extensions") {
    TEST_CASE("polygon mutation matches the Laurent mutation") {
        // Newton polygon of y + (1+x)^2/y mutates to that of y(1+x) + (1+x)/y.
        Laurent f = io::parse_laurent("y+(1+x)^2/y", {"x", "y"});
        MutationData m = segment(iv({0, 1}), iv({1, 0}));
        Polytope Q = mutate_polytope(newton_polytope(f), m);
        Laurent g = algebraic_mutation(f, m.weight, io::parse_laurent("1+x", {"x", "y"}));
        CHECK(Q == newton_polytope(g));
        CHECK(mutate_polytope(Q, segment(iv({0, -1}), iv({1, 0}))) == newton_polytope(f));
    }

    TEST_CASE("non-mutable polygon") {
        // Level -1 is the single vertex (0,1), which cannot absorb a segment.
        Polytope P = hull({iv({0, 1}), iv({-1, -1}), iv({1, -1})});
        CHECK_THROWS_AS(mutate_polytope(P, segment(iv({0, -1}), iv({1, 0}))), DomainError);
        CHECK_NOTHROW(mutate_polytope(P, segment(iv({0, 1}), iv({1, 0}))));
    }

    TEST_CASE("dual piecewise linear action") {
        MutationData m = segment(iv({0, 1}), iv({1, 0}));
        CHECK(mutate_dual_point(to_rat(iv({1, 0})), m) == to_rat(iv({1, 0})));
        CHECK(mutate_dual_point(to_rat(iv({-1, 0})), m) == to_rat(iv({-1, 1})));
    }

    TEST_CASE("mutated dP6 scaffolding stays a scaffolding") {
        Scaffolding S = fixture_scaffolding("dp6_triangles");
        Scaffolding M = mutate_scaffolding(S, segment(iv({0, 1}), iv({1, 0})));
        CHECK(validate_scaffolding(M));
        CHECK(dual_cone_check(M));
        CHECK(classical_period(laurent_from_scaffolding(M), 6) == classical_period(laurent_from_scaffolding(S), 6));
    }

    TEST_CASE("nef partition of the P2 dual triangle") {
        // Delta = conv{(2,-1), (-1,2), (-1,-1)} split into two parts.
        Polytope Delta = hull({iv({2, -1}), iv({-1, 2}), iv({-1, -1})});
        NefPartitionResult r = check_nef_partition(Delta, {{iv({2, -1}), iv({-1, 2})}, {iv({-1, -1})}});
        CHECK(r.report.find("reflexive")->ok);
        CHECK(r.nablas.size() == 2);
        Polytope bad = hull({iv({1, 0}), iv({0, 1}), iv({-2, -2})});
        CHECK_FALSE(check_nef_partition(bad, {{iv({1, 0})}, {iv({0, 1}), iv({-2, -2})}}).report.ok());
    }

    TEST_CASE("Fano nef partitions from the dP6 inversions") {
        for (const std::string name : {"dp6_triangles", "dp6_squares"}) {
            CAPTURE(name);
            Scaffolding S = fixture_scaffolding(name);
            FanoNefPartition fnp = fano_nef_partition_from_inversion(S, laurent_inversion(S));
            CHECK(check_fano_nef_partition(fnp).ok());
        }
    }

    TEST_CASE("Cayley polytope of two segments") {
        Polytope a = hull({iv({0}), iv({1})}), b = hull({iv({0}), iv({2})});
        Cayley c = cayley({a, b});
        CHECK(c.polytope.ambient_dim == 3);
        CHECK(c.polytope.vertices.size() == 4);
        CHECK(c.cone.rays.size() == 4);
        Polytope tri = hull({iv({1, 0}), iv({0, 1}), iv({-1, -1})});
        CHECK(is_gorenstein_of_index(tri, 1));
        CHECK_FALSE(is_gorenstein_of_index(dilate(tri, 2), 1));
        Polytope std2 = hull({iv({0, 0}), iv({1, 0}), iv({0, 1})});
        CHECK(is_gorenstein_of_index(std2, 3));
    }

    TEST_CASE("dP4 polytopes and mutation chain") {
        Scaffolding S = fixture_scaffolding("dp4");
        json ex = load_fixture("dp4").at("expected");
        CHECK(newton_polytope(p_tilde_one_laurent(S)) == p_tilde_one(S));
        Laurent g = io::laurent_from_json(ex.at("g"));
        CHECK(lattice_isomorphic(p_tilde_one(S), newton_polytope(g)).has_value());
        MutationChain mc = mutation_chain(S);
        CHECK(mc.isomorphic);
        CHECK(lattice_isomorphic(mc.result, newton_polytope(io::laurent_from_json(ex.at("h")))).has_value());
        CHECK(picard_class_map(S.shape).rows() == 2);
    }

    TEST_CASE("amenable collection on P4") {
        json fx = load_fixture("p4_amenable");
        GitData gd = io::git_from_json(fx.at("git"));
        ConvexPartition p = io::partition_from_json(fx.at("partition"));
        auto W = io::intvecs_from_json(fx.at("amenable"));
        CHECK(validate_amenable(gd, p, W).ok());
        // Same fan in different coordinates: identical cones by ray index and
        // the same lattice of linear relations among the rays.
        Fan a = tower_from_amenable(gd, p, W), b = tower_from_relations(gd, p, W);
        auto cones = [](Fan F) {
            for (auto& c : F.max_cones) std::sort(c.begin(), c.end());
            std::sort(F.max_cones.begin(), F.max_cones.end());
            return F.max_cones;
        };
        CHECK(cones(a) == cones(b));
        auto relations = [](const Fan& F) { return kernel_basis(IntMatrix::from_cols(F.rays)); };
        CHECK(relations(a) == relations(b));
        Scaffolding S = scaffolding_from_tower(gd, p, W);
        CHECK(validate_scaffolding(S));
        auto broken = W;
        broken[0][0] = 0;  // own block no longer at height -1
        CHECK_FALSE(validate_amenable(gd, p, broken).ok());
    }

    TEST_CASE("strut mutability") {
        json fx = load_fixture("x_5_5_3");
        Scaffolding S = io::scaffolding_from_json(fx.at("scaffolding"));
        for (const auto& e : strut_mutability(S, io::intvecs_from_json(fx.at("scaffolding").at("mutability_weights"))))
            CHECK(e.ok);
        // The weight (-1,-1) does not work for every strut.
        auto entries = strut_mutability(S, {iv({-1, -1})});
        CHECK(std::any_of(entries.begin(), entries.end(), [](const MutabilityEntry& e) { return !e.ok; }));
    }
}
