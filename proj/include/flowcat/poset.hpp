#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flowcat/bitmatrix.hpp"
#include "flowcat/errors.hpp"

namespace flowcat {

// Simplicial set without degeneracies.  faces[n][s] lists the n+1 faces of
// the s-th n-simplex as indices into dimension n-1; faces[0] is empty.
struct DeltaSet {
    std::vector<std::vector<std::vector<int>>> faces;

    int dim() const { return static_cast<int>(faces.size()) - 1; }
    size_t count(int n) const;
    std::vector<size_t> counts() const;
    long long euler() const;

    // d_i d_j = d_{j-1} d_i for i < j, on every simplex.
    bool check_identities() const;
};

// Finite poset over interned string ids.  `leq` is the full reflexive
// relation; `covers` its transitive reduction (the Hasse diagram).
class FinitePoset {
public:
    FinitePoset() = default;

    // Builds the reflexive-transitive closure of `rel` over `ids`.
    // Throws CycleError (with a witness) when the closure is not
    // antisymmetric, CapacityError past `max_pairs`.
    static FinitePoset transitive_closure(const std::vector<std::string>& ids,
                                          const std::vector<std::pair<std::string, std::string>>& rel,
                                          size_t max_pairs = kDefaultMaxPairs);

    // Same, but over pre-interned indices.
    static FinitePoset transitive_closure_indexed(const std::vector<std::string>& ids,
                                                  const std::vector<std::pair<int, int>>& rel,
                                                  size_t max_pairs = kDefaultMaxPairs);

    // Wraps an already reflexive-transitive-antisymmetric relation.
    // Verifies the axioms exhaustively; throws OrderViolationError.
    static FinitePoset from_leq_matrix(const std::vector<std::string>& ids, BitMatrix leq);

    int size() const { return static_cast<int>(ids_.size()); }
    const std::string& id(int i) const { return ids_[i]; }
    const std::vector<std::string>& ids() const { return ids_; }
    int index(const std::string& id) const;        // -1 when absent
    int index_checked(const std::string& id) const;  // throws Error

    bool leq(int i, int j) const { return leq_.get(i, j); }
    bool lt(int i, int j) const { return i != j && leq_.get(i, j); }
    const BitMatrix& leq_matrix() const { return leq_; }

    // Cover pairs (lo, hi), sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    std::vector<int> upper_covers(int i) const;
    std::vector<int> lower_covers(int i) const;

    // Total order compatible with leq.  Kahn's algorithm; ties broken by
    // smallest id so the output is reproducible.
    std::vector<int> linear_extension() const;

    // Nondegenerate nerve: n-simplices are strictly increasing chains
    // x_0 < ... < x_n, faces delete one entry.
    DeltaSet order_complex(size_t max_simplices = kDefaultMaxPairs) const;

    // Poset of nonempty chains ordered by inclusion (face poset of the
    // order complex); element ids join the chain's ids with '<'.
    FinitePoset chain_poset(size_t max_simplices = kDefaultMaxPairs) const;

    // Full subposet on the given element indices (kept in the given order).
    FinitePoset restrict(const std::vector<int>& elements) const;

    bool same_as(const FinitePoset& other) const;  // equal ids and relation

    std::string to_dot(const std::string& graph_name = "poset") const;

    static constexpr size_t kDefaultMaxPairs = 1000000;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    BitMatrix leq_;
    std::vector<std::pair<int, int>> covers_;

    void intern(const std::vector<std::string>& ids);
    void compute_covers();
    void verify_axioms() const;
};

// Map of posets given by an element table on indices.
struct PosetMap {
    const FinitePoset* domain = nullptr;
    const FinitePoset* codomain = nullptr;
    std::vector<int> map;

    int operator()(int i) const { return map[i]; }
    bool is_order_preserving() const;
};

// f o f = f, order-preserving, f(x) <= x.
bool is_descending_closure_operator(const PosetMap& f);
// f o f = f, order-preserving, f(x) >= x.
bool is_ascending_closure_operator(const PosetMap& f);

// Subposet on the image of an endomap.
FinitePoset image_poset(const PosetMap& f);

}  // namespace flowcat
