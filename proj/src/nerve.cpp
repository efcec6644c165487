#include "flowcat/nerve.hpp"

#include <algorithm>

namespace flowcat {

namespace {

// Positions of `path` inside the sorted hom list.
int hom_position(const std::vector<int>& hom, int path_idx) {
    auto it = std::lower_bound(hom.begin(), hom.end(), path_idx);
    if (it == hom.end() || *it != path_idx) throw Error("path is not a member of the hom set");
    return static_cast<int>(it - hom.begin());
}

int compose_in_category(const FlowCategory& fc, int a, int b, int c, int path_f, int path_g) {
    const auto& ab = fc.hom(a, b);
    const auto& bc = fc.hom(b, c);
    return fc.compose_indices(a, b, c, hom_position(ab, path_f), hom_position(bc, path_g));
}

}  // namespace

DiagonalSimplex DiagonalNerve::face(const FlowCategory& fc, const DiagonalSimplex& s, int i) {
    int n = static_cast<int>(s.objects.size()) - 1;
    if (i < 0 || i > n || n == 0) throw Error("face index out of range");
    DiagonalSimplex out;

    // Horizontal part: drop object i, merging the two adjacent slots by
    // entrywise composition when 0 < i < n.
    out.objects = s.objects;
    out.objects.erase(out.objects.begin() + i);
    if (i == 0) {
        out.chains.assign(s.chains.begin() + 1, s.chains.end());
    } else if (i == n) {
        out.chains.assign(s.chains.begin(), s.chains.end() - 1);
    } else {
        out.chains.assign(s.chains.begin(), s.chains.begin() + (i - 1));
        std::vector<int> merged(n + 1);
        for (int k = 0; k <= n; ++k)
            merged[k] = compose_in_category(fc, s.objects[i - 1], s.objects[i], s.objects[i + 1],
                                            s.chains[i - 1][k], s.chains[i][k]);
        out.chains.push_back(std::move(merged));
        out.chains.insert(out.chains.end(), s.chains.begin() + (i + 1), s.chains.end());
    }

    // Vertical part: delete entry i of every chain.
    for (auto& chain : out.chains) chain.erase(chain.begin() + i);
    return out;
}

bool DiagonalNerve::is_degenerate(const FlowCategory& fc, const DiagonalSimplex& s) {
    int n = static_cast<int>(s.objects.size()) - 1;
    for (int j = 0; j < n; ++j) {
        if (s.objects[j] != s.objects[j + 1]) continue;
        int identity = fc.identity_index(s.objects[j]);
        bool slot_is_identity = true;
        for (int v : s.chains[j])
            if (v != identity) slot_is_identity = false;
        if (!slot_is_identity) continue;
        bool vertical_repeat = true;
        for (const auto& chain : s.chains)
            if (chain[j] != chain[j + 1]) vertical_repeat = false;
        if (vertical_repeat) return true;
    }
    return false;
}

DiagonalNerve::DiagonalNerve(const FlowCategory& fc, int max_dim, size_t cap)
    : fc_(&fc), max_dim_(max_dim) {
    const FlowPoset& fps = fc.path_poset();
    int k = fc.object_count();
    simplices_.resize(max_dim + 1);

    for (int o = 0; o < k; ++o) simplices_[0].push_back({{o}, {}});

    size_t generated = simplices_[0].size();

    // Weakly increasing chains of a fixed length in one hom poset.
    auto multichains = [&](int a, int b, int len) {
        const auto& hom = fc.hom(a, b);
        std::vector<std::vector<int>> out;
        std::vector<int> chain;
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == len) {
                out.push_back(chain);
                return;
            }
            for (int p : hom) {
                if (!chain.empty() && !fps.leq(chain.back(), p)) continue;
                chain.push_back(p);
                self(self, depth + 1);
                chain.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };

    for (int n = 1; n <= max_dim; ++n) {
        // Object chains where every hom along the way is nonempty.
        std::vector<std::vector<int>> object_chains;
        std::vector<int> chain;
        auto rec_obj = [&](auto&& self) -> void {
            if (static_cast<int>(chain.size()) == n + 1) {
                object_chains.push_back(chain);
                return;
            }
            for (int o = 0; o < k; ++o) {
                if (!chain.empty() && fc.hom(chain.back(), o).empty()) continue;
                chain.push_back(o);
                self(self);
                chain.pop_back();
            }
        };
        rec_obj(rec_obj);

        for (const auto& objs : object_chains) {
            // Per-slot multichains, combined by depth-first product.
            std::vector<std::vector<std::vector<int>>> slot_choices(n);
            bool empty_slot = false;
            for (int s = 0; s < n && !empty_slot; ++s) {
                slot_choices[s] = multichains(objs[s], objs[s + 1], n + 1);
                if (slot_choices[s].empty()) empty_slot = true;
            }
            if (empty_slot) continue;

            DiagonalSimplex simplex;
            simplex.objects = objs;
            simplex.chains.resize(n);
            auto rec_fill = [&](auto&& self, int s) -> void {
                if (s == n) {
                    ++generated;
                    if (generated > cap)
                        throw CapacityError("diagonal nerve exceeded " + std::to_string(cap) + " simplices");
                    if (!is_degenerate(fc, simplex)) simplices_[n].push_back(simplex);
                    return;
                }
                for (const auto& choice : slot_choices[s]) {
                    simplex.chains[s] = choice;
                    self(self, s + 1);
                }
            };
            rec_fill(rec_fill, 0);
        }
        std::sort(simplices_[n].begin(), simplices_[n].end());
    }
}

size_t DiagonalNerve::count(int n) const {
    if (n < 0 || n > max_dim_) return 0;
    return simplices_[n].size();
}

IntegerChainComplex DiagonalNerve::normalized_chain_complex() const {
    IntegerChainComplex cc;
    cc.ranks.resize(max_dim_ + 1);
    cc.boundaries.resize(max_dim_ + 1);
    for (int n = 0; n <= max_dim_; ++n) cc.ranks[n] = static_cast<long long>(simplices_[n].size());

    for (int n = 1; n <= max_dim_; ++n) {
        SparseIntMatrix b(static_cast<int>(simplices_[n - 1].size()),
                          static_cast<int>(simplices_[n].size()));
        for (size_t s = 0; s < simplices_[n].size(); ++s) {
            int sign = 1;
            for (int i = 0; i <= n; ++i, sign = -sign) {
                DiagonalSimplex f = face(*fc_, simplices_[n][s], i);
                if (is_degenerate(*fc_, f)) continue;
                auto it = std::lower_bound(simplices_[n - 1].begin(), simplices_[n - 1].end(), f);
                if (it == simplices_[n - 1].end() || !(*it == f))
                    throw OrderViolationError("nondegenerate face missing from the nerve");
                b.add(static_cast<int>(it - simplices_[n - 1].begin()), static_cast<int>(s), sign);
            }
        }
        cc.boundaries[n] = std::move(b);
    }
    cc.verify_dd_zero();
    return cc;
}

HomologyResult category_homology(const FlowCategory& fc, int top_degree, size_t cap) {
    DiagonalNerve nerve(fc, top_degree + 1, cap);
    return homology(nerve.normalized_chain_complex(), top_degree);
}

}  // namespace flowcat
