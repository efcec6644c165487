#include "flowcat/flow_category.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "flowcat/homology.hpp"

namespace flowcat {

FlowPath concatenate(const PartialMatching& m, const FlowPath& gamma, const FlowPath& gamma_prime) {
    int middle = gamma.target;
    if (gamma_prime.length() == 0 && gamma_prime.target == middle) return gamma;  // identity law
    int head = gamma_prime.initial(m);
    if (!m.complex().face_lt(head, middle))
        throw TypeMismatchError("cannot concatenate: " + m.complex().id(head) +
                                " does not lie strictly below " + m.complex().id(middle));
    FlowPath out;
    out.target = gamma_prime.target;
    out.us = gamma.us;
    out.us.insert(out.us.end(), gamma_prime.us.begin(), gamma_prime.us.end());
    out.lower = gamma.lower;
    out.lower.insert(out.lower.end(), gamma_prime.lower.begin(), gamma_prime.lower.end());
    std::string why;
    if (!is_valid_flow_path(m, out, &why)) throw Error("concatenation produced an invalid path: " + why);
    return out;
}

FlowPath reduced_concatenate(const PartialMatching& m, const FlowPath& gamma, const FlowPath& delta) {
    return reduce(m, concatenate(m, gamma, delta));
}

FlowPath tau_on_morphism(const FlowPath& gamma, const EmbeddingFunction& emb) {
    // The suffix of gamma starting at e_k; empty (the identity at the
    // target) when k = length + 1.
    if (emb.k < 1 || emb.k > gamma.length() + 1) throw Error("embedding function out of range");
    FlowPath out;
    out.target = gamma.target;
    out.us.assign(gamma.us.begin() + (emb.k - 1), gamma.us.end());
    out.lower.assign(gamma.lower.begin() + (emb.k - 1), gamma.lower.end());
    return out;
}

FlowCategory::FlowCategory(const PartialMatching& m, bool reduced, size_t cap)
    : matching_(&m), reduced_(reduced), paths_(m, reduced, cap) {
    objects_ = m.critical_cells();
    std::sort(objects_.begin(), objects_.end());
    object_of_cell_.assign(m.complex().size(), -1);
    for (int o = 0; o < static_cast<int>(objects_.size()); ++o) object_of_cell_[objects_[o]] = o;
    build_homs();
    build_composition();
}

int FlowCategory::object_of_cell(int cell) const { return object_of_cell_[cell]; }

void FlowCategory::build_homs() {
    const FacePoset& fp = matching_->complex();
    int k = object_count();
    hom_.assign(k, std::vector<std::vector<int>>(k));
    for (int i = 0; i < paths_.size(); ++i) {
        const FlowPath& p = paths_.path(i);
        int a = object_of_cell_[p.target];
        if (p.length() == 0) hom_[a][a].push_back(i);  // the identity 1_a
        int head = p.initial(*matching_);
        for (int b = 0; b < k; ++b)
            if (fp.face_lt(head, objects_[b])) hom_[a][b].push_back(i);
    }
}

void FlowCategory::build_composition() {
    int k = object_count();
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            if (hom_[a][b].empty()) continue;
            for (int c = 0; c < k; ++c) {
                if (hom_[b][c].empty()) continue;
                const auto& ab = hom_[a][b];
                const auto& bc = hom_[b][c];
                std::vector<std::vector<int>> table(ab.size(), std::vector<int>(bc.size(), -1));
                for (size_t i = 0; i < ab.size(); ++i) {
                    for (size_t j = 0; j < bc.size(); ++j) {
                        FlowPath composite =
                            compose(paths_.path(ab[i]), paths_.path(bc[j]), a, b, c);
                        int idx = paths_.index_of(composite);
                        if (idx < 0)
                            throw OrderViolationError("composite path missing from the path poset: " +
                                                      composite.display(*matching_));
                        const auto& ac = hom_[a][c];
                        if (!std::binary_search(ac.begin(), ac.end(), idx) &&
                            std::find(ac.begin(), ac.end(), idx) == ac.end())
                            throw OrderViolationError("composite lands outside hom: " +
                                                      composite.display(*matching_));
                        table[i][j] = idx;
                    }
                }
                comp_[{a, b, c}] = std::move(table);
            }
        }
    }
}

FlowPath FlowCategory::compose(const FlowPath& f, const FlowPath& g, int a, int b, int c) const {
    (void)c;
    if (a == b) return g;  // f = 1_a
    if (b == c) return f;  // g = 1_b
    FlowPath out = concatenate(*matching_, g, f);
    if (reduced_) out = reduce(*matching_, out);
    return out;
}

int FlowCategory::compose_indices(int a, int b, int c, int i, int j) const {
    return comp_.at({a, b, c})[i][j];
}

int FlowCategory::identity_index(int obj) const {
    int idx = paths_.index_of(make_trivial_path(objects_[obj]));
    if (idx < 0) throw Error("identity path missing");
    return idx;
}

FinitePoset FlowCategory::hom_poset(int a, int b) const {
    std::vector<std::string> ids;
    const auto& elems = hom_[a][b];
    ids.reserve(elems.size());
    for (int i : elems) ids.push_back(paths_.path(i).display(*matching_));
    BitMatrix leq(static_cast<int>(elems.size()));
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j)
            if (paths_.leq(elems[i], elems[j])) leq.set(static_cast<int>(i), static_cast<int>(j));
    return FinitePoset::from_leq_matrix(ids, std::move(leq));
}

namespace {

// delta represents a morphism src -> dst of the category when its target
// is src and it starts strictly below dst, or it is the identity.
bool is_morphism(const FlowCategory& fc, const FlowPath& delta, int src_cell, int dst_cell) {
    if (delta.target != src_cell) return false;
    if (src_cell == dst_cell) return delta.length() == 0;
    return fc.matching().complex().face_lt(delta.initial(fc.matching()), dst_cell);
}

}  // namespace

FiberPoset fiber(const FlowCategory& fc, int critical_cell, FiberKind kind) {
    const FlowPoset& fps = fc.path_poset();
    const PartialMatching& m = fc.matching();
    FiberPoset out;
    out.kind = kind;
    out.critical_cell = critical_cell;

    if (kind == FiberKind::Genuine) {
        for (int i = 0; i < fps.size(); ++i)
            if (fps.path(i).target == critical_cell) out.elements.emplace_back(i, i);
        std::vector<int> idx;
        for (auto& [i, j] : out.elements) idx.push_back(i);
        out.poset = fps.poset().restrict(idx);
        return out;
    }

    for (int g = 0; g < fps.size(); ++g) {
        const FlowPath& gamma = fps.path(g);
        for (int d = 0; d < fps.size(); ++d) {
            const FlowPath& delta = fps.path(d);
            if (kind == FiberKind::Right) {
                // delta : c -> tau(gamma)
                if (is_morphism(fc, delta, critical_cell, gamma.target)) out.elements.emplace_back(d, g);
            } else {
                // delta : tau(gamma) -> c
                if (is_morphism(fc, delta, gamma.target, critical_cell)) out.elements.emplace_back(g, d);
            }
        }
    }
    std::sort(out.elements.begin(), out.elements.end());

    int n = static_cast<int>(out.elements.size());
    BitMatrix leq(n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) {
                leq.set(x, y);
                continue;
            }
            int g1, d1, g2, d2;
            if (kind == FiberKind::Right) {
                d1 = out.elements[x].first;
                g1 = out.elements[x].second;
                d2 = out.elements[y].first;
                g2 = out.elements[y].second;
            } else {
                g1 = out.elements[x].first;
                d1 = out.elements[x].second;
                g2 = out.elements[y].first;
                d2 = out.elements[y].second;
            }
            if (!fps.leq(g1, g2)) continue;
            auto emb = subpath_leq(m, fps.path(g1), fps.path(g2));
            if (!emb) continue;
            FlowPath t = tau_on_morphism(fps.path(g1), *emb);
            int ta = fc.object_of_cell(fps.path(g1).target);
            int tb = fc.object_of_cell(fps.path(g2).target);
            int oc = fc.object_of_cell(critical_cell);
            if (kind == FiberKind::Right) {
                // t * delta1 <= delta2 in hom(c, tau(gamma2)).
                FlowPath lhs = fc.compose(fps.path(d1), t, oc, ta, tb);
                int lhs_idx = fps.index_of(lhs);
                if (lhs_idx < 0) throw Error("fiber order composite missing from path poset");
                if (fps.leq(lhs_idx, d2)) leq.set(x, y);
            } else {
                // delta2 * t <= delta1 in hom(tau(gamma1), c).
                FlowPath lhs = fc.compose(t, fps.path(d2), ta, tb, oc);
                int lhs_idx = fps.index_of(lhs);
                if (lhs_idx < 0) throw Error("fiber order composite missing from path poset");
                if (fps.leq(lhs_idx, d1)) leq.set(x, y);
            }
        }
    }

    std::vector<std::string> ids;
    ids.reserve(out.elements.size());
    for (auto& [p, q] : out.elements) {
        std::ostringstream os;
        os << '[' << fps.path(p).display(m) << " , " << fps.path(q).display(m) << ']';
        ids.push_back(os.str());
    }
    out.poset = FinitePoset::from_leq_matrix(ids, std::move(leq));
    return out;
}

PosetMap rho_closure(const FlowCategory& fc, const FiberPoset& right_fiber) {
    if (right_fiber.kind != FiberKind::Right) throw Error("rho_closure wants a right fiber");
    const FlowPoset& fps = fc.path_poset();
    const PartialMatching& m = fc.matching();
    int oc = fc.object_of_cell(right_fiber.critical_cell);
    int one_c = fc.identity_index(oc);

    auto find_element = [&](int d, int g) {
        auto it = std::lower_bound(right_fiber.elements.begin(), right_fiber.elements.end(),
                                   std::make_pair(d, g));
        if (it == right_fiber.elements.end() || *it != std::make_pair(d, g))
            throw Error("fiber element lookup failed");
        return static_cast<int>(it - right_fiber.elements.begin());
    };

    PosetMap rho;
    rho.domain = &right_fiber.poset;
    rho.codomain = &right_fiber.poset;
    rho.map.resize(right_fiber.elements.size());
    for (size_t x = 0; x < right_fiber.elements.size(); ++x) {
        auto [d, g] = right_fiber.elements[x];
        // s_c(delta, gamma) = gamma * delta, an object of tau^{-1}(c).
        FlowPath s = concatenate(m, fps.path(g), fps.path(d));
        if (fc.reduced()) s = reduce(m, s);
        int s_idx = fps.index_of(s);
        if (s_idx < 0) throw Error("rho image path missing from path poset");
        rho.map[x] = find_element(one_c, s_idx);
    }
    return rho;
}

ContractionReport verify_fiber_contractible(const PartialMatching& m, int critical_cell,
                                            const DiscreteMorseFunction& f) {
    ContractionReport report;
    const FacePoset& fp = m.complex();
    FlowPoset fps(m, /*reduced_only=*/false);
    auto log = [&](const std::string& s) { report.log.push_back(s); };

    std::vector<int> fiber_paths = fps.with_target(critical_cell);
    log("fiber over " + fp.id(critical_cell) + ": " + std::to_string(fiber_paths.size()) + " paths");

    // current = F_ell tau^{-1}(c) as the level ell descends.
    std::vector<int> current = fiber_paths;
    auto initial_value = [&](int path_idx) { return f(fps.path(path_idx).initial(m)); };

    long long top = f(critical_cell);
    for (int i : current) top = std::max(top, initial_value(i));

    for (long long level = top; level > f(critical_cell); --level) {
        std::vector<int> at_level;
        for (int i : current)
            if (initial_value(i) == level) at_level.push_back(i);
        if (at_level.empty()) continue;

        int x = fps.path(at_level.front()).initial(m);
        for (int i : at_level)
            if (fps.path(i).initial(m) != x) {
                report.ok = false;
                log("level " + std::to_string(level) + ": faithful function is not injective");
                return report;
            }

        // The level map: upgrade when x is a matched lower cell, drop the
        // first step when x is matched upper.
        bool ascending = m.in_d(x);
        if (!ascending && !m.in_u(x)) {
            report.ok = false;
            log("level " + std::to_string(level) + ": initial cell " + fp.id(x) +
                " is critical but is not the fiber's target");
            return report;
        }

        FinitePoset stage = fps.poset().restrict(current);
        PosetMap op;
        op.domain = &stage;
        op.codomain = &stage;
        op.map.resize(current.size());
        for (size_t pos = 0; pos < current.size(); ++pos) {
            int i = current[pos];
            const FlowPath& gamma = fps.path(i);
            int image = i;
            if (gamma.initial(m) == x) {
                FlowPath mapped = ascending ? upgrade(gamma) : suffixes(gamma)[1];
                image = fps.index_of(mapped);
                if (image < 0) throw Error("level map image missing from path poset");
            }
            auto it = std::lower_bound(current.begin(), current.end(), image);
            if (it == current.end() || *it != image) {
                report.ok = false;
                log("level " + std::to_string(level) + ": image leaves the filtration stage");
                return report;
            }
            op.map[pos] = static_cast<int>(it - current.begin());
        }

        bool law = ascending ? is_ascending_closure_operator(op) : is_descending_closure_operator(op);
        if (!law) {
            report.ok = false;
            log("level " + std::to_string(level) + " (" + fp.id(x) + ", " +
                (ascending ? "ascending" : "descending") + "): closure-operator law fails");
            return report;
        }

        std::vector<int> next;
        for (int i : current)
            if (initial_value(i) < level) next.push_back(i);
        // Image must be exactly the previous filtration stage.
        std::set<int> image_set;
        for (size_t pos = 0; pos < current.size(); ++pos) image_set.insert(current[op.map[pos]]);
        if (std::vector<int>(image_set.begin(), image_set.end()) != next) {
            report.ok = false;
            log("level " + std::to_string(level) + ": image differs from the next filtration stage");
            return report;
        }
        log("level " + std::to_string(level) + " (" + fp.id(x) + "): " + (ascending ? "m" : "b") +
            "-collapse " + std::to_string(current.size()) + " -> " + std::to_string(next.size()));
        current = std::move(next);
    }

    bool collapsed = current.size() == 1 && fps.path(current.front()) == make_trivial_path(critical_cell);
    if (!collapsed) {
        report.ok = false;
        log("filtration did not contract to the trivial path");
        return report;
    }

    // Independent cross-check: the fiber's order complex has trivial
    // reduced homology.
    FinitePoset fiber_poset = fps.poset().restrict(fiber_paths);
    HomologyResult h = homology(chain_complex(fiber_poset.order_complex()));
    if (!is_acyclic_homology(h)) {
        report.ok = false;
        log("fiber homology is " + h.to_string() + ", expected a point");
        return report;
    }
    report.ok = true;
    log("contracted to (" + fp.id(critical_cell) + "); reduced homology trivial");
    return report;
}

}  // namespace flowcat
