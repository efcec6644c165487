#include "flowcat/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace flowcat {

namespace {

struct SuiteRunner {
    const PartialMatching& m;
    const VerifySuiteOptions& opts;
    std::vector<CheckResult> results;

    DiscreteMorseFunction faithful;
    FlowPoset fp;      // all flow paths
    FlowPoset fpr;     // reduced flow paths
    FlowCategory cat;  // C(mu)
    FlowCategory rcat; // Cbar(mu)

    SuiteRunner(const PartialMatching& m_, const VerifySuiteOptions& opts_)
        : m(m_),
          opts(opts_),
          faithful(faithful_function(m_)),
          fp(m_, false, opts_.path_cap),
          fpr(m_, true, opts_.path_cap),
          cat(m_, false, opts_.path_cap),
          rcat(m_, true, opts_.path_cap) {}

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        results.push_back({name, pass, detail});
    }

    void run() {
        check_poset_axioms();
        check_embedding_uniqueness();
        check_faithful_laws();
        check_reduce_laws();
        check_concatenation();
        check_reduced_composition();
        check_colax();
        check_fibers();
        if (opts.include_homology_chain) check_homology_chain();
    }

    // --- individual checks -------------------------------------------------

    void check_poset_axioms() {
        // FlowPoset construction verifies reflexivity, antisymmetry and
        // transitivity; reaching this point means both posets passed.
        add("subpath relation is a partial order (FP and FPbar)", true,
            std::to_string(fp.size()) + " paths, " + std::to_string(fpr.size()) + " reduced");
    }

    void check_embedding_uniqueness() {
        for (int i = 0; i < fp.size(); ++i) {
            for (int j = 0; j < fp.size(); ++j) {
                size_t found = all_embeddings(m, fp.path(i), fp.path(j)).size();
                bool related = fp.leq(i, j);
                if ((related && found != 1) || (!related && found != 0)) {
                    add("embedding functions are unique", false,
                        fp.path(i).display(m) + " <= " + fp.path(j).display(m) + " has " +
                            std::to_string(found) + " embeddings");
                    return;
                }
            }
        }
        add("embedding functions are unique", true);
    }

    void check_faithful_laws() {
        // Strictly decreasing value pattern along every path.
        for (int i = 0; i < fp.size(); ++i) {
            const FlowPath& p = fp.path(i);
            for (int s = 1; s <= p.length(); ++s) {
                long long fe = faithful(p.e(m, s));
                long long fu = faithful(p.u(s));
                long long fnext = faithful(p.e(m, s + 1));
                if (fe < fu || fu <= fnext) {
                    add("faithful value pattern f(e1) >= f(u1) > f(e2) >= ...", false, p.display(m));
                    return;
                }
            }
        }
        add("faithful value pattern f(e1) >= f(u1) > f(e2) >= ...", true);

        PartialMatching round_trip = matching_from_function(faithful);
        add("faithful round trip mu_g = mu", round_trip.pairs() == m.pairs());

        bool mono = true;
        std::string detail;
        for (int i = 0; i < fp.size() && mono; ++i) {
            for (int j = 0; j < fp.size() && mono; ++j) {
                if (!fp.leq(i, j)) continue;
                const FlowPath &a = fp.path(i), &b = fp.path(j);
                if (faithful(a.target) > faithful(b.target)) {
                    mono = false;
                    detail = "target values decrease along " + a.display(m);
                }
                if (a.target == b.target && a.length() > b.length()) {
                    mono = false;
                    detail = "length increases along " + a.display(m);
                }
            }
        }
        add("subpath order respects f(target) and length", mono, detail);
    }

    void check_reduce_laws() {
        for (int i = 0; i < fp.size(); ++i) {
            const FlowPath& p = fp.path(i);
            FlowPath r = reduce(m, p);
            if (!is_reduced(m, r) || !(reduce(m, r) == r)) {
                add("reduce is idempotent onto reduced paths", false, p.display(m));
                return;
            }
            if (is_reduced(m, p) && !(r == p)) {
                add("reduce is idempotent onto reduced paths", false,
                    "retraction moved the reduced path " + p.display(m));
                return;
            }
            if (reducible_intervals(m, p).empty() != is_reduced(m, p)) {
                add("reduce is idempotent onto reduced paths", false,
                    "interval report disagrees with is_reduced on " + p.display(m));
                return;
            }
        }
        add("reduce is idempotent onto reduced paths", true);

        // Order-preserving, and gamma' = r(gamma) sits below gamma: that is
        // exactly the descending-closure-operator statement for
        // inclusion o reduce on FP.
        FinitePoset fp_poset = fp.poset();
        PosetMap closure{&fp_poset, &fp_poset, {}};
        closure.map.resize(fp.size());
        for (int i = 0; i < fp.size(); ++i) {
            int r = fp.index_of(reduce(m, fp.path(i)));
            if (r < 0) {
                add("reduce is a descending closure operator on FP", false, "image missing");
                return;
            }
            closure.map[i] = r;
        }
        add("reduce is a descending closure operator on FP", is_descending_closure_operator(closure));
    }

    // All composable hom pairs of the category, as path indices.
    template <typename F>
    void for_composable(const FlowCategory& c, F&& body) const {
        int k = c.object_count();
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                for (int cc = 0; cc < k; ++cc)
                    for (int f : c.hom(a, b))
                        for (int g : c.hom(b, cc)) body(a, b, cc, f, g);
    }

    void check_concatenation() {
        const FlowPoset& ps = cat.path_poset();

        // Unit laws via the composition tables.
        bool units = true;
        for (int a = 0; a < cat.object_count() && units; ++a) {
            int ida = cat.identity_index(a);
            for (int b = 0; b < cat.object_count() && units; ++b) {
                for (int f : cat.hom(a, b)) {
                    if (cat.compose(ps.path(ida), ps.path(f), a, a, b).target != ps.path(f).target ||
                        !(cat.compose(ps.path(ida), ps.path(f), a, a, b) == ps.path(f)) ||
                        !(cat.compose(ps.path(f), ps.path(cat.identity_index(b)), a, b, b) == ps.path(f)))
                        units = false;
                }
            }
        }
        add("concatenation unit laws", units);

        // Poset map on the product order, exhaustively.
        bool poset_map = true;
        std::string detail;
        for_composable(cat, [&](int a, int b, int c, int f, int g) {
            if (!poset_map) return;
            for (int f2 : cat.hom(a, b)) {
                if (!ps.leq(f, f2)) continue;
                for (int g2 : cat.hom(b, c)) {
                    if (!ps.leq(g, g2)) continue;
                    FlowPath x = cat.compose(ps.path(f), ps.path(g), a, b, c);
                    FlowPath y = cat.compose(ps.path(f2), ps.path(g2), a, b, c);
                    int xi = ps.index_of(x), yi = ps.index_of(y);
                    if (xi < 0 || yi < 0 || !ps.leq(xi, yi)) {
                        poset_map = false;
                        detail = ps.path(f).display(m) + " * " + ps.path(g).display(m);
                        return;
                    }
                }
            }
        });
        add("concatenation is a poset map on product posets", poset_map, detail);

        // Associativity over all composable triples.
        bool assoc = true;
        int k = cat.object_count();
        for (int a = 0; a < k && assoc; ++a)
            for (int b = 0; b < k && assoc; ++b)
                for (int c = 0; c < k && assoc; ++c)
                    for (int d = 0; d < k && assoc; ++d)
                        for (int f : cat.hom(a, b))
                            for (int g : cat.hom(b, c))
                                for (int h : cat.hom(c, d)) {
                                    FlowPath fg = cat.compose(ps.path(f), ps.path(g), a, b, c);
                                    FlowPath gh = cat.compose(ps.path(g), ps.path(h), b, c, d);
                                    if (!(cat.compose(fg, ps.path(h), a, c, d) ==
                                          cat.compose(ps.path(f), gh, a, b, d))) {
                                        assoc = false;
                                    }
                                }
        add("concatenation is associative", assoc);

        // Order/composition interplay: delta <= gamma * delta when
        // l(delta) >= 1, gamma * delta <= gamma when l(gamma) >= 1.
        bool interplay = true;
        for_composable(cat, [&](int a, int b, int c, int g_idx, int f_idx) {
            if (!interplay || a == b || b == c) return;
            // gamma = path of hom(b, c) side in Q orientation: compose gives
            // gamma * delta with gamma = ps.path(f_idx), delta = ps.path(g_idx).
            const FlowPath& delta = ps.path(g_idx);
            const FlowPath& gamma = ps.path(f_idx);
            FlowPath both = concatenate(m, gamma, delta);
            int bi = ps.index_of(both);
            if (bi < 0) {
                interplay = false;
                return;
            }
            if (delta.length() >= 1 && !ps.leq(g_idx, bi)) interplay = false;
            if (gamma.length() >= 1 && !ps.leq(bi, f_idx)) interplay = false;
        });
        add("delta <= gamma*delta and gamma*delta <= gamma", interplay);
    }

    void check_reduced_composition() {
        const FlowPoset& ps = cat.path_poset();
        const FlowPoset& rps = rcat.path_poset();

        // r(g o f) = r(g) o r(f): the reduction functor respects composition.
        bool functor = true;
        for_composable(cat, [&](int a, int b, int c, int f, int g) {
            if (!functor) return;
            FlowPath composite = cat.compose(ps.path(f), ps.path(g), a, b, c);
            FlowPath lhs = reduce(m, composite);
            FlowPath rhs = rcat.compose(reduce(m, ps.path(f)), reduce(m, ps.path(g)), a, b, c);
            if (!(lhs == rhs)) functor = false;
        });
        add("reduction commutes with composition", functor);

        bool assoc = true;
        int k = rcat.object_count();
        for (int a = 0; a < k && assoc; ++a)
            for (int b = 0; b < k && assoc; ++b)
                for (int c = 0; c < k && assoc; ++c)
                    for (int d = 0; d < k && assoc; ++d)
                        for (int f : rcat.hom(a, b))
                            for (int g : rcat.hom(b, c))
                                for (int h : rcat.hom(c, d)) {
                                    FlowPath fg = rcat.compose(rps.path(f), rps.path(g), a, b, c);
                                    FlowPath gh = rcat.compose(rps.path(g), rps.path(h), b, c, d);
                                    if (!(rcat.compose(fg, rps.path(h), a, c, d) ==
                                          rcat.compose(rps.path(f), gh, a, b, d)))
                                        assoc = false;
                                }
        add("reduced composition is associative", assoc);

        // Hom-wise homology agreement between C and Cbar.
        bool hom_homology = true;
        std::string detail;
        for (int a = 0; a < k && hom_homology; ++a) {
            for (int b = 0; b < k && hom_homology; ++b) {
                if (cat.hom(a, b).empty() && rcat.hom(a, b).empty()) continue;
                if (cat.hom(a, b).empty() != rcat.hom(a, b).empty()) {
                    hom_homology = false;
                    break;
                }
                if (cat.hom(a, b).empty()) continue;
                HomologyResult hc = homology(chain_complex(cat.hom_poset(a, b).order_complex()));
                HomologyResult hr = homology(chain_complex(rcat.hom_poset(a, b).order_complex()));
                if (!(hc == hr)) {
                    hom_homology = false;
                    detail = "hom(" + m.complex().id(cat.object_cell(a)) + ", " +
                             m.complex().id(cat.object_cell(b)) + "): " + hc.to_string() + " vs " +
                             hr.to_string();
                }
            }
        }
        add("hom-wise homology of C agrees with Cbar", hom_homology, detail);
    }

    void colax_check_for(const FlowCategory& c, const std::string& label) {
        const FlowPoset& ps = c.path_poset();
        bool normal = true, colax = true, typed = true;
        for (int i = 0; i < ps.size() && normal; ++i) {
            auto emb = subpath_leq(m, ps.path(i), ps.path(i));
            if (!emb || !(tau_on_morphism(ps.path(i), *emb) == make_trivial_path(ps.path(i).target)))
                normal = false;
        }
        add(label + ": tau sends identities to identities", normal);

        // tau(gamma <= gamma') lands in hom(tau gamma, tau gamma').
        for (int i = 0; i < ps.size() && typed; ++i) {
            for (int j = 0; j < ps.size() && typed; ++j) {
                if (!ps.leq(i, j)) continue;
                auto emb = subpath_leq(m, ps.path(i), ps.path(j));
                FlowPath t = tau_on_morphism(ps.path(i), *emb);
                int a = c.object_of_cell(ps.path(i).target);
                int b = c.object_of_cell(ps.path(j).target);
                int ti = ps.index_of(t);
                const auto& hom = c.hom(a, b);
                if (ti < 0 || !std::binary_search(hom.begin(), hom.end(), ti)) typed = false;
            }
        }
        add(label + ": tau lands in the right hom poset", typed);

        // 2-chain colax inequality.
        std::string detail;
        for (int i = 0; i < ps.size() && colax; ++i) {
            for (int j = 0; j < ps.size() && colax; ++j) {
                if (i == j || !ps.leq(i, j)) continue;
                for (int l = 0; l < ps.size() && colax; ++l) {
                    if (j == l || !ps.leq(j, l)) continue;
                    auto e12 = subpath_leq(m, ps.path(i), ps.path(j));
                    auto e23 = subpath_leq(m, ps.path(j), ps.path(l));
                    auto e13 = subpath_leq(m, ps.path(i), ps.path(l));
                    FlowPath t12 = tau_on_morphism(ps.path(i), *e12);
                    FlowPath t23 = tau_on_morphism(ps.path(j), *e23);
                    FlowPath t13 = tau_on_morphism(ps.path(i), *e13);
                    int a = c.object_of_cell(ps.path(i).target);
                    int b = c.object_of_cell(ps.path(j).target);
                    int d = c.object_of_cell(ps.path(l).target);
                    FlowPath rhs = c.compose(t12, t23, a, b, d);
                    int lhs_i = ps.index_of(t13), rhs_i = ps.index_of(rhs);
                    if (lhs_i < 0 || rhs_i < 0 || !ps.leq(lhs_i, rhs_i)) {
                        colax = false;
                        detail = ps.path(i).display(m) + " <= " + ps.path(j).display(m) + " <= " +
                                 ps.path(l).display(m);
                    }
                }
            }
        }
        add(label + ": colax 2-chain inequality", colax, detail);
    }

    void check_colax() {
        colax_check_for(cat, "tau : FP -> C");
        colax_check_for(rcat, "taubar : FPbar -> Cbar");
    }

    void check_fibers() {
        bool rho_ok = true, image_ok = true, left_ok = true, contract_ok = true, reduced_h_ok = true;
        std::string detail;
        for (int cell : m.critical_cells()) {
            FiberPoset right = fiber(cat, cell, FiberKind::Right);
            PosetMap rho = rho_closure(cat, right);
            if (!is_descending_closure_operator(rho)) {
                rho_ok = false;
                detail = "rho over " + m.complex().id(cell);
            }

            // Image of rho is the embedded genuine fiber, order included.
            FiberPoset genuine = fiber(cat, cell, FiberKind::Genuine);
            FinitePoset image = image_poset(rho);
            if (image.size() != genuine.poset.size()) {
                image_ok = false;
            } else {
                for (int x = 0; x < image.size() && image_ok; ++x)
                    for (int y = 0; y < image.size() && image_ok; ++y)
                        if (image.leq(x, y) != genuine.poset.leq(x, y)) image_ok = false;
            }

            // The left fiber is only required to be a poset (construction
            // verifies) and to contain the expected identity elements.
            FiberPoset left = fiber(cat, cell, FiberKind::Left);
            int oc = cat.object_of_cell(cell);
            int idc = cat.identity_index(oc);
            bool has_identity_pair = false;
            for (auto& [g, d] : left.elements)
                if (g == idc && d == idc) has_identity_pair = true;
            if (!has_identity_pair) left_ok = false;

            ContractionReport report = verify_fiber_contractible(m, cell, faithful);
            if (!report.ok) {
                contract_ok = false;
                detail = report.log.empty() ? "" : report.log.back();
            }

            HomologyResult h = homology(chain_complex(genuine.poset.order_complex()));
            if (!is_acyclic_homology(h)) reduced_h_ok = false;
        }
        add("rho_c is a descending closure operator", rho_ok, detail);
        add("rho_c image is the embedded genuine fiber", image_ok);
        add("left fiber posets are well-formed", left_ok);
        add("fiber filtration contracts to the target", contract_ok, detail);
        add("fiber reduced homology vanishes", reduced_h_ok);
    }

    void check_homology_chain() {
        int top = m.complex().top_dim();
        HomologyResult hx = homology(chain_complex(m.complex().to_poset().order_complex()));
        HomologyResult hfp = homology(chain_complex(fp.poset().order_complex()));
        HomologyResult hfpr = homology(chain_complex(fpr.poset().order_complex()));
        HomologyResult hc = category_homology(cat, top, opts.simplex_cap);
        HomologyResult hcr = category_homology(rcat, top, opts.simplex_cap);
        bool chain = hx == hfp && hfp == hfpr && hfpr == hc && hc == hcr;
        std::ostringstream os;
        os << "H(X)=" << hx.to_string() << " H(FP)=" << hfp.to_string() << " H(FPbar)=" << hfpr.to_string()
           << " H(B2C)=" << hc.to_string() << " H(B2Cbar)=" << hcr.to_string();
        add("homology chain H(X) = H(FP) = H(FPbar) = H(B2C) = H(B2Cbar)", chain, os.str());
    }
};

}  // namespace

std::vector<CheckResult> verify_suite(const PartialMatching& m, const VerifySuiteOptions& opts) {
    SuiteRunner runner(m, opts);
    runner.run();
    return runner.results;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

FacePoset random_two_complex(uint64_t seed, int max_cells) {
    std::mt19937_64 rng(seed);
    int vertex_count = 4 + static_cast<int>(rng() % 3);

    std::vector<std::string> vertices;
    for (int v = 0; v < vertex_count; ++v) vertices.push_back(std::to_string(v));

    SimplicialComplexInput input;
    for (const auto& v : vertices) input.facets.push_back({v});

    auto cell_count = [&]() {
        SimplicialComplexInput copy = input;
        return FacePoset::from_simplicial_complex(copy).size();
    };

    int attempts = 12 + static_cast<int>(rng() % 10);
    for (int t = 0; t < attempts; ++t) {
        bool triangle = rng() % 2 == 0;
        int a = static_cast<int>(rng() % vertex_count);
        int b = static_cast<int>(rng() % vertex_count);
        int c = static_cast<int>(rng() % vertex_count);
        if (a == b || (triangle && (a == c || b == c))) continue;
        SimplicialComplexInput candidate = input;
        if (triangle)
            candidate.facets.push_back({vertices[a], vertices[b], vertices[c]});
        else
            candidate.facets.push_back({vertices[a], vertices[b]});
        SimplicialComplexInput probe = candidate;
        if (FacePoset::from_simplicial_complex(probe).size() <= max_cells) input = std::move(candidate);
    }
    (void)cell_count;
    return FacePoset::from_simplicial_complex(input);
}

}  // namespace flowcat
