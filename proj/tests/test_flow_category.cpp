#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "flowcat/flow_category.hpp"
#include "flowcat/verify.hpp"

using namespace flowcat;
using namespace flowcat::testing;

namespace {

FlowPath path(const PartialMatching& m,
              const std::vector<std::pair<std::string, std::string>>& steps,
              const std::string& target) {
    std::vector<std::pair<int, int>> isteps;
    for (const auto& [e, u] : steps)
        isteps.emplace_back(m.complex().index_checked(e), m.complex().index_checked(u));
    return make_flow_path(m, isteps, m.complex().index_checked(target));
}

}  // namespace

TEST_CASE("triangle flow category: hom([v0],[v1,v2]) = {g1, g2} with trivial order") {
    auto fx = triangle();
    FlowCategory cat(fx.matching, false);
    REQUIRE(cat.object_count() == 2);
    int a = cat.object_of_cell(fx.complex->index_checked("v0"));
    int b = cat.object_of_cell(fx.complex->index_checked("v1,v2"));
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);

    const auto& hom = cat.hom(a, b);
    REQUIRE(hom.size() == 2);
    FlowPath g1 = path(fx.matching, {{"v1", "v0,v1"}}, "v0");
    FlowPath g2 = path(fx.matching, {{"v2", "v0,v2"}}, "v0");
    std::set<FlowPath> got{cat.path_poset().path(hom[0]), cat.path_poset().path(hom[1])};
    CHECK(got == std::set<FlowPath>{g1, g2});
    // Trivial order: the two morphisms are incomparable.
    CHECK_FALSE(cat.path_poset().leq(hom[0], hom[1]));
    CHECK_FALSE(cat.path_poset().leq(hom[1], hom[0]));

    // The only other nonidentity hom data: nothing from [v1,v2] down.
    CHECK(cat.hom(b, a).empty());
    CHECK(cat.hom(a, a).size() == 1);
    CHECK(cat.hom(b, b).size() == 1);
}

TEST_CASE("concatenation unit laws and the paper identity gamma01 = gamma01 * gamma0") {
    auto fx = triangle();
    const auto& m = fx.matching;
    FlowPath g0 = make_trivial_path(fx.complex->index_checked("v0"));
    FlowPath g01 = path(m, {{"v0,v1", "v0,v1"}}, "v0");

    CHECK(concatenate(m, g01, g0) == g01);  // right identity at the target

    // Left identity 1 * gamma = gamma, on an actual morphism of C(mu).
    FlowPath g1 = path(m, {{"v1", "v0,v1"}}, "v0");
    FlowPath one_12 = make_trivial_path(fx.complex->index_checked("v1,v2"));
    CHECK(concatenate(m, one_12, g1) == g1);

    // Type mismatch: middle cells disagree.
    FlowPath g12 = make_trivial_path(fx.complex->index_checked("v1,v2"));
    CHECK_THROWS_AS(concatenate(m, g12, g01), TypeMismatchError);
}

TEST_CASE("concatenation on the boundary tetrahedron is associative") {
    auto fx = boundary_tetrahedron();
    FlowCategory cat(fx.matching, false);
    const auto& ps = cat.path_poset();
    int k = cat.object_count();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                for (int d = 0; d < k; ++d)
                    for (int f : cat.hom(a, b))
                        for (int g : cat.hom(b, c))
                            for (int h : cat.hom(c, d)) {
                                FlowPath fg = cat.compose(ps.path(f), ps.path(g), a, b, c);
                                FlowPath gh = cat.compose(ps.path(g), ps.path(h), b, c, d);
                                CHECK(cat.compose(fg, ps.path(h), a, c, d) ==
                                      cat.compose(ps.path(f), gh, a, b, d));
                            }
}

TEST_CASE("reduced composition commutes with reduction on the 2-simplex") {
    auto fx = two_simplex();
    FlowCategory cat(fx.matching, false);
    FlowCategory rcat(fx.matching, true);
    const auto& ps = cat.path_poset();
    int k = cat.object_count();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                for (int f : cat.hom(a, b))
                    for (int g : cat.hom(b, c)) {
                        FlowPath lhs = reduce(fx.matching, cat.compose(ps.path(f), ps.path(g), a, b, c));
                        FlowPath rhs = rcat.compose(reduce(fx.matching, ps.path(f)),
                                                    reduce(fx.matching, ps.path(g)), a, b, c);
                        CHECK(lhs == rhs);
                    }

    // When the concatenation is already reduced, composing adds nothing.
    FlowPath gamma = path(fx.matching, {{"v1,v2", "v0,v1,v2"}, {"v0", "v0,v1"}}, "v1");
    CHECK(reduced_concatenate(fx.matching, gamma, make_trivial_path(fx.complex->index_checked("v1"))) ==
          gamma);
}

TEST_CASE("collapsing functor on the triangle matches the paper's table") {
    auto fx = triangle();
    const auto& m = fx.matching;
    FlowPath g0 = make_trivial_path(fx.complex->index_checked("v0"));
    FlowPath g12 = make_trivial_path(fx.complex->index_checked("v1,v2"));
    FlowPath g1 = path(m, {{"v1", "v0,v1"}}, "v0");
    FlowPath g2 = path(m, {{"v2", "v0,v2"}}, "v0");
    FlowPath g01 = path(m, {{"v0,v1", "v0,v1"}}, "v0");
    FlowPath g02 = path(m, {{"v0,v2", "v0,v2"}}, "v0");

    auto tau = [&](const FlowPath& x, const FlowPath& y) {
        auto emb = subpath_leq(m, x, y);
        REQUIRE(emb.has_value());
        return tau_on_morphism(x, *emb);
    };
    CHECK(tau(g0, g01) == g0);
    CHECK(tau(g0, g02) == g0);
    CHECK(tau(g1, g01) == g0);
    CHECK(tau(g2, g02) == g0);
    CHECK(tau(g1, g12) == g1);
    CHECK(tau(g2, g12) == g2);
    // Normality.
    CHECK(tau(g1, g1) == g0);
    CHECK(tau(g12, g12) == g12);
}

TEST_CASE("triangle right fiber over [v0] is the paper's 7-element poset") {
    auto fx = triangle();
    const auto& m = fx.matching;
    FlowCategory cat(fx.matching, false);
    FiberPoset rf = fiber(cat, fx.complex->index_checked("v0"), FiberKind::Right);
    REQUIRE(rf.elements.size() == 7);
    CHECK(rf.poset.covers().size() == 6);

    const auto& ps = cat.path_poset();
    auto idx = [&](const FlowPath& p) {
        int i = ps.index_of(p);
        REQUIRE(i >= 0);
        return i;
    };
    FlowPath g0 = make_trivial_path(fx.complex->index_checked("v0"));
    FlowPath g12 = make_trivial_path(fx.complex->index_checked("v1,v2"));
    FlowPath g1 = path(m, {{"v1", "v0,v1"}}, "v0");
    FlowPath g2 = path(m, {{"v2", "v0,v2"}}, "v0");
    FlowPath g01 = path(m, {{"v0,v1", "v0,v1"}}, "v0");
    FlowPath g02 = path(m, {{"v0,v2", "v0,v2"}}, "v0");

    std::set<std::pair<int, int>> elements(rf.elements.begin(), rf.elements.end());
    std::set<std::pair<int, int>> expected{
        {idx(g0), idx(g0)}, {idx(g0), idx(g1)}, {idx(g0), idx(g2)},   {idx(g0), idx(g01)},
        {idx(g0), idx(g02)}, {idx(g1), idx(g12)}, {idx(g2), idx(g12)},
    };
    CHECK(elements == expected);

    // The six covers from the paper's Hasse diagram.
    auto fiber_index = [&](int d, int g) {
        auto it = std::find(rf.elements.begin(), rf.elements.end(), std::make_pair(d, g));
        REQUIRE(it != rf.elements.end());
        return static_cast<int>(it - rf.elements.begin());
    };
    std::set<std::pair<int, int>> covers;
    for (auto [lo, hi] : rf.poset.covers()) covers.insert({lo, hi});
    std::set<std::pair<int, int>> expected_covers{
        {fiber_index(idx(g0), idx(g0)), fiber_index(idx(g0), idx(g01))},
        {fiber_index(idx(g0), idx(g0)), fiber_index(idx(g0), idx(g02))},
        {fiber_index(idx(g0), idx(g1)), fiber_index(idx(g0), idx(g01))},
        {fiber_index(idx(g0), idx(g2)), fiber_index(idx(g0), idx(g02))},
        {fiber_index(idx(g0), idx(g1)), fiber_index(idx(g1), idx(g12))},
        {fiber_index(idx(g0), idx(g2)), fiber_index(idx(g2), idx(g12))},
    };
    CHECK(covers == expected_covers);

    // Right fiber over the edge is a single identity pair.
    FiberPoset rf2 = fiber(cat, fx.complex->index_checked("v1,v2"), FiberKind::Right);
    REQUIRE(rf2.elements.size() == 1);
    CHECK(rf2.elements[0] == std::make_pair(idx(g12), idx(g12)));
}

TEST_CASE("triangle genuine fiber is the zigzag") {
    auto fx = triangle();
    FlowCategory cat(fx.matching, false);
    FiberPoset gf = fiber(cat, fx.complex->index_checked("v0"), FiberKind::Genuine);
    CHECK(gf.elements.size() == 5);
    CHECK(gf.poset.covers().size() == 4);  // g0<g01, g0<g02, g1<g01, g2<g02
}

TEST_CASE("rho closure on the triangle fibers") {
    auto fx = triangle();
    FlowCategory cat(fx.matching, false);
    for (const std::string& cell : {"v0", "v1,v2"}) {
        FiberPoset rf = fiber(cat, fx.complex->index_checked(cell), FiberKind::Right);
        PosetMap rho = rho_closure(cat, rf);
        CHECK(is_descending_closure_operator(rho));

        // Identity pairs are fixed points.
        int one = cat.identity_index(cat.object_of_cell(fx.complex->index_checked(cell)));
        for (size_t x = 0; x < rf.elements.size(); ++x)
            if (rf.elements[x].first == one) CHECK(rho.map[x] == static_cast<int>(x));

        // Image is order-isomorphic to the genuine fiber.
        FiberPoset gf = fiber(cat, fx.complex->index_checked(cell), FiberKind::Genuine);
        FinitePoset image = image_poset(rho);
        REQUIRE(image.size() == gf.poset.size());
        for (int i = 0; i < image.size(); ++i)
            for (int j = 0; j < image.size(); ++j) CHECK(image.leq(i, j) == gf.poset.leq(i, j));
    }
}

TEST_CASE("left fiber poset builds and contains the identity pair") {
    auto fx = triangle();
    FlowCategory cat(fx.matching, false);
    FiberPoset lf = fiber(cat, fx.complex->index_checked("v0"), FiberKind::Left);
    int one = cat.identity_index(cat.object_of_cell(fx.complex->index_checked("v0")));
    bool found = false;
    for (auto& [g, d] : lf.elements)
        if (g == one && d == one) found = true;
    CHECK(found);
}

TEST_CASE("fiber contraction succeeds on the worked fixtures") {
    for (auto make : {triangle, two_simplex, boundary_tetrahedron}) {
        auto fx = make();
        auto f = faithful_function(fx.matching);
        for (int cell : fx.matching.critical_cells()) {
            auto report = verify_fiber_contractible(fx.matching, cell, f);
            INFO(fx.name, " over ", fx.complex->id(cell));
            for (const auto& line : report.log) INFO(line);
            CHECK(report.ok);
        }
    }
}

TEST_CASE("boundary tetrahedron category has the expected objects") {
    auto fx = boundary_tetrahedron();
    FlowCategory cat(fx.matching, false);
    REQUIRE(cat.object_count() == 2);
    int a = cat.object_of_cell(fx.complex->index_checked("v0"));
    int b = cat.object_of_cell(fx.complex->index_checked("v1,v2,v3"));
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    CHECK(!cat.hom(a, b).empty());  // flows from under the top face down to v0
    CHECK(cat.hom(b, a).empty());
}

TEST_CASE("empty matching: homs are the length-0 paths under the face relation") {
    auto fx = full_simplex_trivial();
    FlowCategory cat(fx.matching, false);
    REQUIRE(cat.object_count() == fx.complex->size());
    for (int a = 0; a < cat.object_count(); ++a)
        for (int b = 0; b < cat.object_count(); ++b) {
            size_t expected =
                a == b ? 1 : (fx.complex->face_lt(cat.object_cell(a), cat.object_cell(b)) ? 1 : 0);
            CHECK(cat.hom(a, b).size() == expected);
        }
}

TEST_CASE("full verify suite on the triangle") {
    auto fx = triangle();
    auto results = verify_suite(fx.matching);
    for (const auto& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
    CHECK(all_pass(results));
}
