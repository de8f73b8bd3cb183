#include "doctest.h"
#include "support.hpp"

using namespace tmir;
using namespace tmir::test;

TEST_SUITE("scaffolding") {
    TEST_CASE("shipped scaffoldings are valid and pass the dual-cone test") {
        for (const auto& name : fixture_names()) {
            json fx = load_fixture(name);
            if (!fx.contains("scaffolding")) continue;
            CAPTURE(name);
            Scaffolding S = io::scaffolding_from_json(fx.at("scaffolding"));
            ScaffoldingReport r = scaffolding_report(S);
            CHECK(r.report.ok());
            CHECK(r.struts_missing_vertices.empty());
            DualConeResult d = dual_cone_result(S);
            CHECK(d.preconditions);
            CHECK(d.equal);
        }
    }

    TEST_CASE("non-nef strut is rejected") {
        Scaffolding S = fixture_scaffolding("dp3");
        S.struts[0].coeffs = iv({1, -1, 1});
        S.target = struts_hull(S);
        CHECK_FALSE(validate_scaffolding(S));
        CHECK_FALSE(dual_cone_check(S));
    }

    TEST_CASE("target that is not covered by the struts") {
        Scaffolding S = fixture_scaffolding("dp6_triangles");
        S.target = dilate(S.target, 2);
        ScaffoldingReport r = scaffolding_report(S);
        CHECK_FALSE(r.report.ok());
        CHECK_FALSE(dual_cone_check(S));
    }

    TEST_CASE("strut polytopes of the dP6 triangles") {
        Scaffolding S = fixture_scaffolding("dp6_triangles");
        CHECK(S.struts.size() == 3);
        for (std::size_t s = 0; s < 3; ++s) {
            Polytope P = strut_polytope(S, s);
            CHECK(P.vertices.size() == 3);
            CHECK(integral_points(P).size() == 3);
        }
        CHECK(struts_hull(S).vertices.size() == 6);
    }

    TEST_CASE("products of projective spaces") {
        Fan F = projective_space_product({2, 1});
        CHECK(F.dim == 3);
        CHECK(F.rays.size() == 5);
        CHECK(F.max_cones.size() == 6);
        CHECK(is_complete(F));
        auto groups = product_factors(F);
        REQUIRE(groups);
        CHECK(groups->size() == 2);
        Fan f1;
        f1.dim = 2;
        f1.rays = {iv({1, 0}), iv({0, 1}), iv({-1, 1}), iv({0, -1})};
        f1.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
        CHECK_FALSE(product_factors(f1));
    }

    TEST_CASE("strut polynomial carries multinomial weights") {
        Scaffolding S = fixture_scaffolding("dp3");
        Laurent f = laurent_from_scaffolding(S);
        CHECK(f.terms().size() == 10);
        CHECK(classical_period(f, 6) == naive_period(f, 6));
        CHECK(f == io::laurent_from_json(load_fixture("dp3").at("f")));
    }

    TEST_CASE("split into divisor and basis struts") {
        Scaffolding S = fixture_scaffolding("new4d");
        auto split = split_struts(S);
        REQUIRE(split);
        CHECK(split->divisor_struts.size() == 2);
        CHECK(split->basis_struts.size() == 3);
        CHECK(abs(determinant(split->chi_inverse)) == 1);
    }
}
