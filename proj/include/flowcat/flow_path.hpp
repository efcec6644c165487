#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flowcat/morse.hpp"
#include "flowcat/poset.hpp"

namespace flowcat {

// A flow path (e_1, u_1, ..., e_n, u_n; c) of an acyclic matching:
//   - u_i in U(mu), e_i = u_i or mu_inv(u_i),
//   - c critical,
//   - u_i has e_{i+1} as a proper face (e_{n+1} = c), and the step never
//     climbs the pair it just descended, i.e. e_{i+1} != mu_inv(u_i).
// The last condition keeps the u_i strictly decreasing in the flow order,
// which is what grants finiteness and the strictly decreasing value
// pattern of faithful functions.
//
// Stored canonically as the u-sequence, a flag per step telling whether
// e_i is the matched lower cell, and the target.
struct FlowPath {
    std::vector<int> us;
    std::vector<char> lower;  // lower[i] != 0  <=>  e_{i+1-1} = mu_inv(u_i)
    int target = -1;

    int length() const { return static_cast<int>(us.size()); }

    // e_i for 1 <= i <= length()+1 (the last one is the target).
    int e(const PartialMatching& m, int i) const;
    int u(int i) const { return us[i - 1]; }  // 1 <= i <= length()
    int initial(const PartialMatching& m) const { return length() == 0 ? target : e(m, 1); }

    bool operator==(const FlowPath& other) const = default;
    bool operator<(const FlowPath& other) const;  // canonical order

    std::string display(const PartialMatching& m) const;
};

FlowPath make_trivial_path(int critical_cell);

// Validates the flow-path conditions; throws Error on violation.
FlowPath make_flow_path(const PartialMatching& m, const std::vector<std::pair<int, int>>& steps, int target);

bool is_valid_flow_path(const PartialMatching& m, const FlowPath& p, std::string* why = nullptr);

// The strictly increasing witness of a subpath relation gamma <= gamma':
// phi : {0..k} -> {0..n+1} with phi(0) = 0, phi(k) = n+1,
// u_j = u'_{phi(j)} for j < k, and e_j a face of e'_p for
// phi(j-1) < p <= phi(j).
struct EmbeddingFunction {
    int k = 0;
    std::vector<int> phi;  // size k+1
};

// Unique embedding function for gamma <= gamma', or nullopt.  Greedy
// smallest-first with backtracking; uniqueness makes the order immaterial.
std::optional<EmbeddingFunction> subpath_leq(const PartialMatching& m, const FlowPath& gamma,
                                             const FlowPath& gamma_prime);

// All embedding functions (test support for the uniqueness lemma).
std::vector<EmbeddingFunction> all_embeddings(const PartialMatching& m, const FlowPath& gamma,
                                              const FlowPath& gamma_prime);

// Reduced: no step returns into the boundary of the preceding matched
// lower cell, i.e. e_{i+1} is never a proper face of mu_inv(u_i).
bool is_reduced(const PartialMatching& m, const FlowPath& p);

// Maximal runs of step indices removed by the reduction map, as closed
// intervals [a, b] in the original indexing, ascending.
std::vector<std::pair<int, int>> reducible_intervals(const PartialMatching& m, const FlowPath& p);

// Removes reducible intervals right to left until the path is reduced.
// Idempotent; the result is the maximal reduced subpath.
FlowPath reduce(const PartialMatching& m, const FlowPath& p);

// Replaces e_1 by u_1; the identity embedding gives p <= upgrade(p).
// Throws LengthError on length 0.
FlowPath upgrade(const FlowPath& p);

// gamma^(i) = (e_i, u_i, ..., e_n, u_n; c) for i = 1..n+1.
std::vector<FlowPath> suffixes(const FlowPath& p);

// Index set of the stable subspace along a reduced path: all suffixes plus
// the upgrades of the suffixes that start at a matched lower cell.
std::vector<FlowPath> stable_path_set(const PartialMatching& m, const FlowPath& p);

// Union of stable_path_set over all reduced paths with the given target.
std::vector<FlowPath> stable_space(const PartialMatching& m, int critical_cell,
                                   const std::vector<FlowPath>& reduced_paths);

// Exactly FP(mu), by backward extension from the critical cells; sorted
// canonically.  Throws CapacityError past `cap` paths.
std::vector<FlowPath> enumerate_flow_paths(const PartialMatching& m, size_t cap = 1000000);

// FP(mu) (or its reduced subposet) with the full subpath relation,
// verified to be a partial order at build time.
class FlowPoset {
public:
    FlowPoset() = default;
    FlowPoset(const PartialMatching& m, bool reduced_only, size_t cap = 1000000);

    const PartialMatching& matching() const { return *matching_; }
    bool reduced_only() const { return reduced_only_; }
    int size() const { return static_cast<int>(paths_.size()); }
    const std::vector<FlowPath>& paths() const { return paths_; }
    const FlowPath& path(int i) const { return paths_[i]; }
    int index_of(const FlowPath& p) const;  // -1 when absent

    bool leq(int i, int j) const { return leq_.get(i, j); }
    const BitMatrix& leq_matrix() const { return leq_; }

    FinitePoset poset() const;  // with display-string ids

    // Indices of paths with the given target.
    std::vector<int> with_target(int critical_cell) const;

private:
    const PartialMatching* matching_ = nullptr;
    bool reduced_only_ = false;
    std::vector<FlowPath> paths_;
    BitMatrix leq_;

    void verify_partial_order() const;
};

}  // namespace flowcat
