#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "flowcat/cw.hpp"
#include "flowcat/homology.hpp"

using namespace flowcat;

TEST_CASE("full 2-simplex has 7 cells") {
    SimplicialComplexInput in;
    in.facets = {{"0", "1", "2"}};
    auto fp = FacePoset::from_simplicial_complex(in);
    CHECK(fp.size() == 7);
    CHECK(fp.cells_per_dim() == std::vector<long long>{3, 3, 1});
    CHECK(fp.validate_regular().ok);
}

TEST_CASE("boundary of the tetrahedron has 14 cells") {
    SimplicialComplexInput in;
    in.facets = {{"0", "1", "2"}, {"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}};
    auto fp = FacePoset::from_simplicial_complex(in);
    CHECK(fp.size() == 14);
    CHECK(fp.cells_per_dim() == std::vector<long long>{4, 6, 4});
    CHECK(fp.euler_characteristic() == 2);
}

TEST_CASE("circle from three edges") {
    SimplicialComplexInput in;
    in.facets = {{"0", "1"}, {"1", "2"}, {"0", "2"}};
    auto fp = FacePoset::from_simplicial_complex(in);
    CHECK(fp.size() == 6);
    CHECK(fp.euler_characteristic() == 0);
}

TEST_CASE("torus fixture counts, regularity and homology") {
    auto fp = FacePoset::torus_fixture();
    CHECK(fp.cells_per_dim() == std::vector<long long>{9, 18, 9});
    CHECK(fp.euler_characteristic() == 0);
    CHECK(fp.validate_regular().ok);

    auto h = homology(chain_complex(fp.to_poset().order_complex()));
    HomologyResult want;
    want.betti = {1, 2, 1};
    CHECK(h == want);
}

TEST_CASE("diamond violation is reported") {
    // A length-2 interval with three interior cells.
    auto fp = FacePoset::from_cells({"bot", "m1", "m2", "m3", "top"}, {0, 1, 1, 1, 2},
                                    {{"bot", "m1"},
                                     {"bot", "m2"},
                                     {"bot", "m3"},
                                     {"m1", "top"},
                                     {"m2", "top"},
                                     {"m3", "top"}});
    auto report = fp.validate_regular();
    CHECK_FALSE(report.ok);
    REQUIRE(!report.diagnostics.empty());
    CHECK(report.diagnostics.front().find("expected 2") != std::string::npos);
}

TEST_CASE("euler characteristic agrees with order-complex homology") {
    for (auto make : {testing::triangle, testing::two_simplex, testing::boundary_tetrahedron}) {
        auto fx = make();
        auto h = homology(chain_complex(fx.complex->to_poset().order_complex()));
        long long chi = 0;
        int sign = 1;
        for (long long b : h.betti) {
            chi += sign * b;
            sign = -sign;
        }
        CHECK(chi == fx.complex->euler_characteristic());
    }
}

TEST_CASE("re-ingesting facet lists is idempotent") {
    auto fx = testing::boundary_tetrahedron();
    SimplicialComplexInput again;
    again.facets = fx.complex->facet_lists();
    auto fp2 = FacePoset::from_simplicial_complex(again);
    CHECK(fp2.ids() == fx.complex->ids());
    CHECK(fp2.cover_pairs() == fx.complex->cover_pairs());
}

TEST_CASE("simplicial complex parser") {
    std::istringstream in("# a comment\n0 1 2\n0 3  # trailing comment\n\n");
    auto input = parse_simplicial_complex(in);
    REQUIRE(input.facets.size() == 2);
    CHECK(input.facets[0] == std::vector<std::string>{"0", "1", "2"});

    std::istringstream bad("0 0 1\n");
    CHECK_THROWS_AS(parse_simplicial_complex(bad), ParseError);
}

TEST_CASE("empty complex is rejected") {
    SimplicialComplexInput in;
    CHECK_THROWS_AS(FacePoset::from_simplicial_complex(in), EmptyComplexError);
}

TEST_CASE("barycentric subdivision keeps homology") {
    SimplicialComplexInput in;
    in.facets = {{"0", "1"}, {"1", "2"}, {"0", "2"}};
    auto poset = FacePoset::from_simplicial_complex(in).to_poset();
    auto h1 = homology(chain_complex(poset.order_complex()));
    auto h2 = homology(chain_complex(poset.chain_poset().order_complex()));
    CHECK(h1 == h2);
    HomologyResult circle;
    circle.betti = {1, 1};
    CHECK(h1 == circle);
}
