#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flowcat/poset.hpp"

namespace flowcat {

// Facet list of a finite simplicial complex; vertex ids are free-form
// tokens.  normalize() removes duplicate and dominated facets.
struct SimplicialComplexInput {
    std::vector<std::vector<std::string>> facets;
    void normalize();
};

struct RegularityReport {
    bool ok = true;
    std::vector<std::string> diagnostics;
};

// Face poset of a finite regular CW complex: graded cells with the
// codimension-1 cover relation and its derived full face relation.
class FacePoset {
public:
    FacePoset() = default;

    // `covers` lists (face, coface) pairs raising dimension by one.
    static FacePoset from_cells(std::vector<std::string> ids, std::vector<int> dims,
                                const std::vector<std::pair<std::string, std::string>>& covers);

    static FacePoset from_simplicial_complex(SimplicialComplexInput input);

    // The 3x3 cubical grid with opposite boundary edges identified:
    // 9 vertices p<i><j>, 18 edges h<i><j>/v<i><j>, 9 squares s<i><j>,
    // all coordinates mod 3.
    static FacePoset torus_fixture();

    int size() const { return static_cast<int>(ids_.size()); }
    const std::string& id(int c) const { return ids_[c]; }
    const std::vector<std::string>& ids() const { return ids_; }
    int index(const std::string& id) const;
    int index_checked(const std::string& id) const;
    int dim(int c) const { return dims_[c]; }
    int top_dim() const;

    bool face_leq(int a, int b) const { return leq_.get(a, b); }       // a is a face of b
    bool face_lt(int a, int b) const { return a != b && leq_.get(a, b); }
    const std::vector<int>& cofacets(int c) const { return cover_up_[c]; }   // covers above
    const std::vector<int>& facets_of(int c) const { return cover_down_[c]; }  // covers below
    std::vector<std::pair<int, int>> cover_pairs() const;

    // Necessary combinatorial conditions for regularity: gradedness of the
    // cover relation and the diamond property (every interval of length two
    // has exactly two interior cells).  Passing them does not certify
    // regularity, which is not decidable from the poset alone.
    RegularityReport validate_regular() const;

    std::vector<long long> cells_per_dim() const;
    long long euler_characteristic() const;

    FinitePoset to_poset() const;  // the face relation as a FinitePoset

    // Facet list (maximal cells by the face relation); round-trips
    // simplicial complexes through from_simplicial_complex.
    std::vector<std::vector<std::string>> facet_lists() const;

private:
    std::vector<std::string> ids_;
    std::vector<int> dims_;
    std::vector<std::vector<int>> cover_up_;
    std::vector<std::vector<int>> cover_down_;
    BitMatrix leq_;

    void finish(const std::vector<std::pair<int, int>>& covers);
};

// Text format: one facet per line, whitespace-separated vertex ids,
// '#' starts a comment.
SimplicialComplexInput parse_simplicial_complex(std::istream& in);

}  // namespace flowcat
