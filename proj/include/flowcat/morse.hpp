#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flowcat/cw.hpp"

namespace flowcat {

class PartialMatching;

// Integer-valued function on the cells of a face poset.
struct DiscreteMorseFunction {
    const FacePoset* complex = nullptr;
    std::vector<long long> values;

    long long operator()(int cell) const { return values[cell]; }
};

struct MorseCheck {
    bool ok = true;
    std::vector<int> offending;  // cells with |N+| > 1 or |N-| > 1
};

// Bijection mu : D -> U between disjoint cell sets with d covered by mu(d).
// Unmatched cells are critical.
class PartialMatching {
public:
    PartialMatching() = default;
    PartialMatching(const FacePoset* fp, const std::vector<std::pair<int, int>>& pairs);
    static PartialMatching from_id_pairs(const FacePoset* fp,
                                         const std::vector<std::pair<std::string, std::string>>& pairs);

    const FacePoset& complex() const { return *fp_; }
    const FacePoset* complex_ptr() const { return fp_; }

    bool in_d(int cell) const { return role_[cell] == Role::Down; }
    bool in_u(int cell) const { return role_[cell] == Role::Up; }
    bool critical(int cell) const { return role_[cell] == Role::Critical; }
    int mate(int cell) const { return mate_[cell]; }  // -1 for critical cells
    int mu(int d) const;                              // requires d in D
    int mu_inv(int u) const;                          // requires u in U

    const std::vector<int>& d_cells() const { return d_cells_; }
    const std::vector<int>& u_cells() const { return u_cells_; }
    const std::vector<int>& critical_cells() const { return critical_; }

    std::vector<std::pair<int, int>> pairs() const;

private:
    enum class Role : uint8_t { Critical, Down, Up };
    const FacePoset* fp_ = nullptr;
    std::vector<int> mate_;
    std::vector<Role> role_;
    std::vector<int> d_cells_, u_cells_, critical_;
};

struct AcyclicityResult {
    bool acyclic = true;
    // A closed Forman path d1, u1, d2, u2, ..., dk, uk witnessing the
    // failure (d1 is a facet of uk), empty when acyclic.
    std::vector<int> cycle;
};

MorseCheck is_discrete_morse(const DiscreteMorseFunction& f);

// mu_f: D = cells with a non-strict upper neighbor, mu(e) the unique one.
// Throws NotMorseError when is_discrete_morse fails.
PartialMatching matching_from_function(const DiscreteMorseFunction& f);

// Cycle test on the matched digraph (nodes U, arcs u -> u' when
// mu_inv(u') is covered by u and u != u').  Agrees with gradient-ness of
// all Forman paths; that equivalence is property-tested against direct
// enumeration.
AcyclicityResult is_acyclic(const PartialMatching& m);

// The reflexive-transitive closure of the flow relation: the returned
// poset has leq(a, b) exactly when b unrhd a, i.e. b flows to a (so the
// matching's sources are maximal).  Throws CycleError when m is not
// acyclic.
FinitePoset unrhd_order(const PartialMatching& m);

// Injective integer function from a linear extension of unrhd_order whose
// induced matching is m; verified faithful on construction.
DiscreteMorseFunction faithful_function(const PartialMatching& m);

// Injective and strictly increasing along every non-matched face relation.
bool is_faithful(const DiscreteMorseFunction& f);

// f(e) < f(e') iff g(e) < g(e') over all cover pairs.
bool equivalent(const DiscreteMorseFunction& f, const DiscreteMorseFunction& g);

// Seeded random acyclic matching: shuffles the cover pairs and matches
// greedily, keeping a pair only when the matching stays acyclic.
PartialMatching greedy_matching(const FacePoset& fp, uint64_t seed);

// File formats ('#' comments): matching lines "d_id u_id", Morse-function
// lines "cell_id integer".
PartialMatching parse_matching(const FacePoset* fp, std::istream& in);
DiscreteMorseFunction parse_morse_function(const FacePoset* fp, std::istream& in);

}  // namespace flowcat
