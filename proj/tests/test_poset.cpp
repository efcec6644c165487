#include <doctest.h>

#include <algorithm>

#include "flowcat/homology.hpp"
#include "flowcat/poset.hpp"

using namespace flowcat;

namespace {

FinitePoset diamond() {
    return FinitePoset::transitive_closure({"a", "b", "c", "d"},
                                           {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

// The hexagonal boundary poset: three minimal, three maximal elements,
// each maximal covering two minimal ones in a cycle.
FinitePoset hexagon() {
    return FinitePoset::transitive_closure(
        {"g0", "g1", "g2", "g01", "g02", "g12"},
        {{"g0", "g01"}, {"g1", "g01"}, {"g1", "g12"}, {"g2", "g12"}, {"g2", "g02"}, {"g0", "g02"}});
}

}  // namespace

TEST_CASE("transitive closure of a chain") {
    auto p = FinitePoset::transitive_closure({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.leq(p.index("a"), p.index("c")));
    CHECK_FALSE(p.leq(p.index("c"), p.index("a")));
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("empty relation gives a discrete poset") {
    auto p = FinitePoset::transitive_closure({"a", "b"}, {});
    CHECK(p.covers().empty());
    CHECK(p.leq(0, 0));
    CHECK_FALSE(p.leq(0, 1));
}

TEST_CASE("two-cycle raises CycleError with witness") {
    try {
        FinitePoset::transitive_closure({"a", "b"}, {{"a", "b"}, {"b", "a"}});
        FAIL("expected CycleError");
    } catch (const CycleError& e) {
        std::vector<std::string> cycle = e.cycle;
        std::sort(cycle.begin(), cycle.end());
        CHECK(cycle == std::vector<std::string>{"a", "b"});
    }
}

TEST_CASE("linear extension of a chain and an antichain") {
    auto chain = FinitePoset::transitive_closure({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    auto ext = chain.linear_extension();
    CHECK(ext == std::vector<int>{0, 1, 2});

    auto antichain = FinitePoset::transitive_closure({"x", "y"}, {});
    auto ext2 = antichain.linear_extension();
    CHECK(antichain.id(ext2[0]) == "x");
    CHECK(antichain.id(ext2[1]) == "y");
}

TEST_CASE("linear extension of the diamond is the least valid extension") {
    auto p = diamond();

    // Oracle: enumerate every permutation, keep the order-compatible ones,
    // take the lexicographically least by element id.
    std::vector<int> perm{0, 1, 2, 3};
    std::vector<std::vector<std::string>> valid;
    do {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < i; ++j)
                if (p.lt(perm[i], perm[j])) ok = false;
        if (ok) {
            std::vector<std::string> names;
            for (int x : perm) names.push_back(p.id(x));
            valid.push_back(names);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(valid.size() == 2);  // a b c d and a c b d
    auto least = *std::min_element(valid.begin(), valid.end());

    std::vector<std::string> got;
    for (int x : p.linear_extension()) got.push_back(p.id(x));
    CHECK(got == least);
    CHECK(got == std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("linear extension respects the order") {
    auto p = hexagon();
    auto ext = p.linear_extension();
    for (size_t i = 0; i < ext.size(); ++i)
        for (size_t j = i + 1; j < ext.size(); ++j) CHECK_FALSE(p.lt(ext[j], ext[i]));
}

TEST_CASE("closure operator predicates") {
    auto chain = FinitePoset::transitive_closure({"a", "b"}, {{"a", "b"}});

    PosetMap identity{&chain, &chain, {0, 1}};
    CHECK(is_descending_closure_operator(identity));
    CHECK(is_ascending_closure_operator(identity));

    PosetMap to_min{&chain, &chain, {0, 0}};
    CHECK(is_descending_closure_operator(to_min));
    CHECK_FALSE(is_ascending_closure_operator(to_min));

    PosetMap to_max{&chain, &chain, {1, 1}};
    CHECK_FALSE(is_descending_closure_operator(to_max));
    CHECK(is_ascending_closure_operator(to_max));
}

TEST_CASE("order complex simplex counts") {
    auto chain3 = FinitePoset::transitive_closure({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(chain3.order_complex().counts() == std::vector<size_t>{3, 3, 1});

    CHECK(hexagon().order_complex().counts() == std::vector<size_t>{6, 6});

    auto discrete = FinitePoset::transitive_closure({"a", "b", "c", "d"}, {});
    CHECK(discrete.order_complex().counts() == std::vector<size_t>{4});
}

TEST_CASE("order complex satisfies the simplicial identities") {
    for (const auto& p : {diamond(), hexagon()}) {
        auto ds = p.order_complex();
        CHECK(ds.check_identities());
    }
}

TEST_CASE("closure operators preserve order-complex homology") {
    auto p = diamond();
    // Descending closure collapsing the c-side onto the b-side chain.
    PosetMap f{&p, &p, {0, 1, 0, 1}};
    REQUIRE(f.map[p.index("d")] == p.index("b"));
    REQUIRE(is_descending_closure_operator(f));

    auto full = homology(chain_complex(p.order_complex()));
    auto image = homology(chain_complex(image_poset(f).order_complex()));
    CHECK(full == image);
}

TEST_CASE("chain poset is the barycentric face poset") {
    auto chain2 = FinitePoset::transitive_closure({"a", "b"}, {{"a", "b"}});
    auto cp = chain2.chain_poset();
    CHECK(cp.size() == 3);  // a, b, a<b
    CHECK(cp.leq(cp.index_checked("a"), cp.index_checked("a<b")));
    CHECK(cp.leq(cp.index_checked("b"), cp.index_checked("a<b")));
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(FinitePoset::transitive_closure({"a", "b"}, {{"a", "b"}}, 0), CapacityError);
}

TEST_CASE("dot export is deterministic and lists covers") {
    auto p = diamond();
    auto dot = p.to_dot("d");
    CHECK(dot.find("\"a\" -> \"b\"") != std::string::npos);
    CHECK(dot.find("\"c\" -> \"d\"") != std::string::npos);
    CHECK(dot == p.to_dot("d"));
}
