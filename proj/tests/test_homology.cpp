#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "flowcat/nerve.hpp"
#include "flowcat/verify.hpp"
#include "snf_oracle.hpp"

using namespace flowcat;
using namespace flowcat::testing;

TEST_CASE("smith normal form worked examples") {
    auto snf = smith_normal_form(SparseIntMatrix::from_dense({{2, 4}, {6, 8}}));
    CHECK(snf.rank == 2);
    CHECK(snf.factors == std::vector<BigInt>{2, 4});

    SparseIntMatrix eye(3, 3);
    for (int i = 0; i < 3; ++i) eye.add(i, i, 1);
    auto snf_eye = smith_normal_form(eye);
    CHECK(snf_eye.factors == std::vector<BigInt>{1, 1, 1});

    auto snf_zero = smith_normal_form(SparseIntMatrix(4, 2));
    CHECK(snf_zero.rank == 0);
    CHECK(snf_zero.factors.empty());
}

TEST_CASE("smith normal form agrees with the elementary-operations oracle") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + static_cast<int>(rng() % 8);
        int c = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<long long>> dense(r, std::vector<long long>(c));
        for (auto& row : dense)
            for (auto& v : row) v = static_cast<long long>(rng() % 19) - 9;
        auto got = smith_normal_form(SparseIntMatrix::from_dense(dense));
        auto want = snf_oracle(dense);
        CHECK(got.rank == want.rank);
        CHECK(got.factors == want.factors);
    }
}

TEST_CASE("chain complexes of order complexes") {
    auto point = FinitePoset::transitive_closure({"x"}, {});
    auto h_point = homology(chain_complex(point.order_complex()));
    HomologyResult want_point;
    want_point.betti = {1};
    CHECK(h_point == want_point);
    CHECK(is_acyclic_homology(h_point));

    // Hexagon boundary: d1 is 6x6 of rank 5, homology is the circle.
    auto hexagon = FinitePoset::transitive_closure(
        {"g0", "g1", "g2", "g01", "g02", "g12"},
        {{"g0", "g01"}, {"g1", "g01"}, {"g1", "g12"}, {"g2", "g12"}, {"g2", "g02"}, {"g0", "g02"}});
    auto cc = chain_complex(hexagon.order_complex());
    REQUIRE(cc.ranks == std::vector<long long>{6, 6});
    CHECK(smith_normal_form(cc.boundaries[1]).rank == 5);
    HomologyResult circle;
    circle.betti = {1, 1};
    CHECK(homology(cc) == circle);

    // Full 2-simplex: contractible.
    auto fx = two_simplex();
    CHECK(is_acyclic_homology(homology(chain_complex(fx.complex->to_poset().order_complex()))));
}

TEST_CASE("boundary tetrahedron order complex is the 2-sphere") {
    auto fx = boundary_tetrahedron();
    auto h = homology(chain_complex(fx.complex->to_poset().order_complex()));
    HomologyResult sphere;
    sphere.betti = {1, 0, 1};
    CHECK(h == sphere);
    CHECK(h.euler == 2);
}

TEST_CASE("projective plane torsion via the six-vertex triangulation") {
    SimplicialComplexInput in;
    in.facets = {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "2", "6"},
                 {"2", "3", "5"}, {"3", "4", "6"}, {"2", "4", "5"}, {"3", "5", "6"}, {"2", "4", "6"}};
    auto fp = FacePoset::from_simplicial_complex(in);
    REQUIRE(fp.euler_characteristic() == 1);
    auto h = homology(chain_complex(fp.to_poset().order_complex()));
    HomologyResult rp2;
    rp2.betti = {1, 0, 0};
    rp2.torsion = {{}, {2}, {}};
    CHECK(h == rp2);

    // Mod-2 cross-check: torsion shows up in both neighboring degrees.
    auto b2 = betti_mod2(chain_complex(fp.to_poset().order_complex()));
    CHECK(b2 == std::vector<long long>{1, 1, 1});
}

TEST_CASE("dd = 0 is verified on every constructed complex") {
    auto fx = torus();
    auto cc = chain_complex(fx.complex->to_poset().order_complex());
    cc.verify_dd_zero();  // throws on failure

    // Break it and watch the verifier object.
    cc.boundaries[2].columns[0][0].second += 1;
    CHECK_THROWS_AS(cc.verify_dd_zero(), OrderViolationError);
}

TEST_CASE("diagonal nerve of the triangle category is the circle") {
    auto fx = triangle();
    FlowCategory cat(fx.matching, false);
    DiagonalNerve nerve(cat, 3);
    CHECK(nerve.count(0) == 2);
    CHECK(nerve.count(1) == 2);
    CHECK(nerve.count(2) == 0);  // every higher diagonal simplex is degenerate

    HomologyResult circle;
    circle.betti = {1, 1};
    CHECK(category_homology(cat, 1) == circle);

    FlowCategory rcat(fx.matching, true);
    CHECK(category_homology(rcat, 1) == circle);
}

TEST_CASE("diagonal nerve of a one-object category is a point") {
    SimplicialComplexInput in;
    in.facets = {{"a"}};
    auto fp = FacePoset::from_simplicial_complex(in);
    PartialMatching m(&fp, {});
    FlowCategory cat(m, false);
    CHECK(is_acyclic_homology(category_homology(cat, 1)));
}

TEST_CASE("diagonal nerve of a collapsed segment is a point") {
    // Single edge with b matched into ab: one object, trivial hom.
    SimplicialComplexInput in;
    in.facets = {{"a", "b"}};
    auto fp = FacePoset::from_simplicial_complex(in);
    auto m = PartialMatching::from_id_pairs(&fp, {{"b", "a,b"}});
    FlowCategory cat(m, false);
    CHECK(cat.object_count() == 1);
    CHECK(is_acyclic_homology(category_homology(cat, 1)));

    // Same edge, empty matching: three objects a -> ab <- b, still a point.
    PartialMatching trivial(&fp, {});
    FlowCategory cat2(trivial, false);
    CHECK(is_acyclic_homology(category_homology(cat2, 1)));
}

TEST_CASE("diagonal nerve faces satisfy the simplicial identities") {
    for (auto make : {triangle, two_simplex, boundary_tetrahedron}) {
        auto fx = make();
        for (bool reduced : {false, true}) {
            FlowCategory cat(fx.matching, reduced);
            DiagonalNerve nerve(cat, 3);
            for (int n = 2; n <= 3; ++n) {
                for (const auto& s : nerve.simplices(n)) {
                    for (int i = 0; i <= n; ++i)
                        for (int j = i + 1; j <= n; ++j) {
                            auto a = DiagonalNerve::face(cat, DiagonalNerve::face(cat, s, j), i);
                            auto b = DiagonalNerve::face(cat, DiagonalNerve::face(cat, s, i), j - 1);
                            CHECK(a == b);
                        }
                }
            }
        }
    }
}

TEST_CASE("torus homology through every model") {
    auto fx = torus();
    HomologyResult want;
    want.betti = {1, 2, 1};

    FlowPoset fp(fx.matching, false);
    FlowPoset fpr(fx.matching, true);
    CHECK(homology(chain_complex(fp.poset().order_complex())) == want);
    CHECK(homology(chain_complex(fpr.poset().order_complex())) == want);

    FlowCategory cat(fx.matching, false);
    FlowCategory rcat(fx.matching, true);
    CHECK(category_homology(cat, 2) == want);
    CHECK(category_homology(rcat, 2) == want);

    // Mod-2 Betti numbers of the order complex agree with the torus.
    CHECK(betti_mod2(chain_complex(fp.poset().order_complex())) ==
          std::vector<long long>{1, 2, 1});
}

TEST_CASE("homology result formatting") {
    HomologyResult h;
    h.betti = {1, 2, 0};
    h.torsion = {{}, {}, {2, 4}};
    CHECK(h.to_string() == "(Z, Z^2, Z/2 + Z/4)");
}
