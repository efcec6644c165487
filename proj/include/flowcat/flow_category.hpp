#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "flowcat/flow_path.hpp"

namespace flowcat {

// Q-style concatenation: gamma is an arrow into tau(gamma), gamma_prime
// continues strictly below it.  The result appends gamma_prime's steps and
// retargets to tau(gamma_prime).  Composing with the length-0 path at
// tau(gamma) is the identity law.  Throws TypeMismatchError when the
// middle cell disagrees.
FlowPath concatenate(const PartialMatching& m, const FlowPath& gamma, const FlowPath& gamma_prime);

// Reduced composition r(gamma * delta).
FlowPath reduced_concatenate(const PartialMatching& m, const FlowPath& gamma, const FlowPath& delta);

// The collapsing functor on a morphism: for gamma <= gamma' with embedding
// phi, the suffix of gamma starting at e_k.  Lands in
// hom(tau(gamma), tau(gamma')) and is the identity when the targets agree.
FlowPath tau_on_morphism(const FlowPath& gamma, const EmbeddingFunction& emb);

// Poset-enriched flow category C(mu), or its reduced version when
// `reduced` is set: objects are the critical cells, hom(a, b) the flow
// paths with target a starting strictly below b, ordered as a subposet of
// FP(mu).  Composition is concatenation, reduced composition in the
// reduced variant.
class FlowCategory {
public:
    FlowCategory() = default;
    FlowCategory(const PartialMatching& m, bool reduced, size_t cap = 1000000);

    const PartialMatching& matching() const { return *matching_; }
    bool reduced() const { return reduced_; }
    const FlowPoset& path_poset() const { return paths_; }

    int object_count() const { return static_cast<int>(objects_.size()); }
    int object_cell(int obj) const { return objects_[obj]; }
    const std::vector<int>& objects() const { return objects_; }
    int object_of_cell(int cell) const;  // -1 when not critical

    // Path indices (into path_poset) of hom(a, b); hom(a, a) holds exactly
    // the identity, the length-0 path at the object's cell.
    const std::vector<int>& hom(int a, int b) const { return hom_[a][b]; }
    FinitePoset hom_poset(int a, int b) const;

    // Composite of f : a -> b and g : b -> c ("g after f").
    FlowPath compose(const FlowPath& f, const FlowPath& g, int a, int b, int c) const;
    // Table form on hom indices; returns the index in hom(a, c).
    int compose_indices(int a, int b, int c, int i, int j) const;

    int identity_index(int obj) const;  // index of 1_obj in path_poset

    bool path_leq(int i, int j) const { return paths_.leq(i, j); }

private:
    const PartialMatching* matching_ = nullptr;
    bool reduced_ = false;
    FlowPoset paths_;
    std::vector<int> objects_;
    std::vector<int> object_of_cell_;
    std::vector<std::vector<std::vector<int>>> hom_;
    std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> comp_;

    void build_homs();
    void build_composition();
};

// Fiber posets of the collapsing functor over a critical cell.
enum class FiberKind {
    Genuine,  // tau^{-1}(c): paths with target c under the subpath order
    Right,    // c down tau: pairs (delta, gamma), delta : c -> tau(gamma)
    Left,     // tau down c: pairs (gamma, delta), delta : tau(gamma) -> c
};

struct FiberPoset {
    FiberKind kind;
    int critical_cell;
    // Path-poset indices: (delta, gamma) for Right, (gamma, delta) for
    // Left, (gamma, gamma) for Genuine.
    std::vector<std::pair<int, int>> elements;
    FinitePoset poset;
};

FiberPoset fiber(const FlowCategory& fc, int critical_cell, FiberKind kind);

// The descending closure operator rho_c = i_c o s_c on the right fiber,
// (delta, gamma) |-> (1_c, gamma * delta); its image is the embedded
// genuine fiber.
PosetMap rho_closure(const FlowCategory& fc, const FiberPoset& right_fiber);

struct ContractionReport {
    bool ok = false;
    std::vector<std::string> log;
};

// Replays the fiber-contraction proof: filters tau^{-1}(c) by the faithful
// value of the initial cell and collapses one level at a time with the
// matched-pair closure operators, then cross-checks that the fiber's
// reduced homology vanishes.
ContractionReport verify_fiber_contractible(const PartialMatching& m, int critical_cell,
                                            const DiscreteMorseFunction& f);

}  // namespace flowcat
