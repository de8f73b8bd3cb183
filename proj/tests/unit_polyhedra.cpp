#include "doctest.h"
#include "support.hpp"

using namespace tmir;
using namespace tmir::test;

namespace {

std::vector<IntVec> random_points(std::size_t dim, std::size_t n, std::mt19937& rng, int r = 4) {
    std::uniform_int_distribution<int> d(-r, r);
    std::vector<IntVec> pts;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec p;
        for (std::size_t k = 0; k < dim; ++k) p.emplace_back(d(rng));
        pts.push_back(p);
    }
    return pts;
}

IntVec cross3(const IntVec& a, const IntVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Facet normals of a full-dimensional 3D point set: planes through three
// points with all points on one side and a two-dimensional contact set.
std::vector<IntVec> brute_facet_normals(const std::vector<IntVec>& pts) {
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                IntVec n = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                if (is_zero(n)) continue;
                n = primitive(n);
                int above = 0, below = 0;
                for (const auto& p : pts) {
                    Int s = dot(n, sub(p, pts[i]));
                    above += s > 0;
                    below += s < 0;
                }
                if (above && below) continue;
                if (below) n = neg(n);
                out.push_back(n);
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_SUITE("polyhedra") {
    TEST_CASE("planar hull matches monotone chain") {
        std::mt19937 rng(11);
        for (int t = 0; t < 80; ++t) {
            auto pts = random_points(2, 3 + rng() % 10, rng);
            auto oracle = hull2d(pts);
            Polytope P = convex_hull(pts, 2);
            if (oracle.size() < 3) {
                CHECK_FALSE(P.full_dimensional());
                continue;
            }
            std::vector<IntVec> got;
            for (const auto& v : P.vertices) got.push_back(to_int(v));
            CHECK(got == oracle);
            CHECK(P.facets.size() == oracle.size());
        }
    }

    TEST_CASE("spatial hull facets match brute force") {
        std::mt19937 rng(12);
        for (int t = 0; t < 30; ++t) {
            auto pts = random_points(3, 5 + rng() % 6, rng, 3);
            Polytope P = convex_hull(pts, 3);
            if (!P.full_dimensional()) continue;
            std::vector<IntVec> normals;
            for (const auto& h : P.facets) normals.push_back(h.normal);
            std::sort(normals.begin(), normals.end());
            CHECK(normals == brute_facet_normals(pts));
            for (const auto& p : pts) CHECK(P.contains(p));
        }
    }

    TEST_CASE("integral points match a box scan") {
        std::mt19937 rng(13);
        for (int t = 0; t < 40; ++t) {
            auto pts = random_points(2, 3 + rng() % 6, rng);
            if (hull2d(pts).size() < 3) continue;
            Polytope P = convex_hull(pts, 2);
            std::vector<IntVec> want;
            for (int x = -4; x <= 4; ++x)
                for (int y = -4; y <= 4; ++y)
                    if (in_hull2d(pts, iv({x, y}))) want.push_back(iv({x, y}));
            auto got = integral_points(P);
            std::sort(got.begin(), got.end());
            CHECK(got == want);
            CHECK(interior_integral_points(P).size() + boundary_integral_points(P).size() == got.size());
        }
    }

    TEST_CASE("duality is an involution on polytopes with interior origin") {
        std::vector<std::vector<IntVec>> cases = {
            {iv({1, 0}), iv({0, 1}), iv({-1, -1})},
            {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})},
            {iv({2, -1}), iv({-1, 2}), iv({-1, -1})},
            {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({-1, -1, -1})},
            {iv({3, 1}), iv({-2, 1}), iv({-1, -2}), iv({1, -3})},
        };
        for (const auto& vs : cases) {
            Polytope P = convex_hull(vs, vs.front().size());
            REQUIRE(origin_in_interior(P));
            CHECK(dual_polytope(dual_polytope(P)) == P);
        }
        Polytope tri = convex_hull(cases[0], 2);
        CHECK(is_fano(tri));
        CHECK(dual_polytope(tri).is_lattice());
        CHECK(integral_points(dual_polytope(tri)).size() == 10);
    }

    TEST_CASE("Minkowski sums and differences") {
        std::mt19937 rng(14);
        for (int t = 0; t < 25; ++t) {
            auto a = random_points(2, 3 + rng() % 4, rng, 3), b = random_points(2, 3 + rng() % 4, rng, 3);
            if (hull2d(a).size() < 3 || hull2d(b).size() < 3) continue;
            Polytope P = convex_hull(a, 2), Q = convex_hull(b, 2);
            std::vector<IntVec> sums;
            for (const auto& x : a)
                for (const auto& y : b) sums.push_back(add(x, y));
            std::vector<IntVec> got;
            Polytope S = minkowski_sum(P, Q);
            for (const auto& v : S.vertices) got.push_back(to_int(v));
            CHECK(got == hull2d(sums));
            Erosion e = minkowski_difference(S, Q);
            REQUIRE(e.result);
            CHECK(e.exact);
            CHECK(*e.result == P);
        }
        Polytope square = convex_hull(std::vector<IntVec>{iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}, 2);
        Polytope tri = convex_hull(std::vector<IntVec>{iv({0, 0}), iv({1, 0}), iv({0, 1})}, 2);
        CHECK_FALSE(minkowski_difference(tri, square).exact);
    }

    TEST_CASE("lattice isomorphism under random unimodular maps") {
        std::mt19937 rng(15);
        std::vector<std::vector<IntVec>> shapes = {
            {iv({1, 0}), iv({0, 1}), iv({-1, -1})},
            {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1}), iv({1, 1})},
            {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({-1, -1, -1})},
        };
        for (const auto& vs : shapes) {
            const std::size_t n = vs.front().size();
            Polytope P = convex_hull(vs, n);
            for (int k = 0; k < 10; ++k) {
                IntMatrix U = random_unimodular(n, rng);
                Polytope Q = linear_image(P, U);
                auto map = lattice_isomorphic(P, Q);
                REQUIRE(map);
                CHECK(linear_image(P, *map) == Q);
            }
        }
        Polytope tri = convex_hull(shapes[0], 2);
        Polytope dil = dilate(tri, 2);
        CHECK_FALSE(lattice_isomorphic(tri, dil));
        Polytope sq = convex_hull(std::vector<IntVec>{iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})}, 2);
        CHECK_FALSE(lattice_isomorphic(tri, sq));
    }

    TEST_CASE("spanning and normal fans of the reflexive triangle") {
        Polytope tri = convex_hull(std::vector<IntVec>{iv({1, 0}), iv({0, 1}), iv({-1, -1})}, 2);
        Fan span = spanning_fan(tri);
        CHECK(is_complete(span));
        CHECK(span.max_cones.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) CHECK(is_smooth_cone(span, i));
        CHECK(fans_isomorphic(span, normal_fan(dual_polytope(tri))).has_value());
        CHECK(adjacent_cones(span).size() == 3);
    }

    TEST_CASE("cones") {
        Cone c = cone_from_generators(2, {iv({1, 0}), iv({1, 2})});
        CHECK(c.contains(iv({1, 1})));
        CHECK_FALSE(c.contains(iv({0, 1})));
        CHECK(c.contains_in_relative_interior(to_rat(iv({2, 1}))));
        CHECK_FALSE(c.contains_in_relative_interior(to_rat(iv({1, 0}))));
        Cone d = cone_from_inequalities(2, c.facets);
        CHECK(d == c);
        Cone half = cone_from_generators(2, {iv({1, 0})}, {iv({0, 1})});
        CHECK_FALSE(half.pointed());
        CHECK(intersect(c, cone_from_generators(2, {iv({1, 1}), iv({0, 1})})) ==
              cone_from_generators(2, {iv({1, 1}), iv({1, 2})}));
    }

    TEST_CASE("lower-dimensional polytopes") {
        Polytope seg = convex_hull(std::vector<IntVec>{iv({0, 0, 0}), iv({2, 2, 0})}, 3);
        CHECK(seg.dim() == 1);
        CHECK(integral_points(seg).size() == 3);
        CHECK(seg.contains_in_relative_interior(to_rat(iv({1, 1, 0}))));
        CHECK(proper_faces(seg).size() == 2);
        Polytope empty = polytope_from_halfspaces(1, {make_halfspace(to_rat(iv({1})), 1), make_halfspace(to_rat(iv({-1})), 1)});
        CHECK(empty.empty());
    }
}
