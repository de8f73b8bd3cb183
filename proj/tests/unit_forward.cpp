#include "doctest.h"
#include "support.hpp"

using namespace tmir;
using namespace tmir::test;

TEST_SUITE("forward") {
    TEST_CASE("cubic threefold") {
        json fx = load_fixture("cubic");
        GitData gd = io::git_from_json(fx.at("git"));
        ConvexPartition p = io::partition_from_json(fx.at("partition"));
        CHECK(validate_partition(gd, p).ok());
        Laurent f = przyjalkowski(gd, p);
        CHECK(f == io::parse_laurent("(1+x+y)^3/(x*y)", {"x", "y"}));
        CHECK(bundle_degrees(gd, p) == im({{3}}));
        CHECK(forward_variables(p) == std::vector<std::size_t>{1, 2});
    }

    TEST_CASE("projective bundle example") {
        json fx = load_fixture("p_bundle");
        GitData gd = io::git_from_json(fx.at("git"));
        ConvexPartition p = io::partition_from_json(fx.at("partition"));
        CHECK(validate_partition(gd, p).ok());
        CHECK(przyjalkowski(gd, p) == io::laurent_from_json(fx.at("f")));
        IntMatrix N = normalised_weight_matrix(gd, p.B);
        for (std::size_t i = 0; i < p.B.size(); ++i)
            for (std::size_t j = 0; j < p.B.size(); ++j) CHECK(N(i, p.B[j]) == (i == j ? 1 : 0));
    }

    TEST_CASE("partition validation failures") {
        json fx = load_fixture("cubic");
        GitData gd = io::git_from_json(fx.at("git"));
        ConvexPartition bad = io::partition_from_json(fx.at("partition"));
        bad.S[0].pop_back();
        Report r = validate_partition(gd, bad);
        CHECK_FALSE(r.ok());
        REQUIRE(r.find("partition"));
        CHECK_FALSE(r.find("partition")->ok);
        // D_B must be a basis of the character lattice.
        GitData flat = gd;
        flat.characters[0] = iv({0});
        CHECK_FALSE(validate_partition(flat, io::partition_from_json(fx.at("partition"))).ok());
    }

    TEST_CASE("every partitioned fixture round trips through its scaffolding") {
        for (const auto& name : fixture_names()) {
            json fx = load_fixture(name);
            if (!fx.contains("partition") || !fx.contains("f")) continue;
            CAPTURE(name);
            GitData gd = io::git_from_json(fx.at("git"));
            ConvexPartition p = io::partition_from_json(fx.at("partition"));
            Laurent g = przyjalkowski(gd, p);
            CHECK(laurent_from_scaffolding(scaffolding_from_forward(gd, p)) == g);
            Laurent f = io::laurent_from_json(fx.at("f"));
            if (fx.value("f_constant_dropped", false))
                CHECK(without_constant(g) == without_constant(f));
            else
                CHECK(g == f);
        }
    }
}
