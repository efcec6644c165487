#pragma once

#include <map>
#include <vector>

#include "flowcat/flow_category.hpp"
#include "flowcat/homology.hpp"

namespace flowcat {

// One n-simplex of the diagonal of the bisimplicial nerve of a
// poset-enriched category: an object chain x_0, ..., x_n together with,
// for each slot i in 1..n, a weakly increasing chain of n+1 morphisms in
// hom(x_{i-1}, x_i).  Slot i is chains[i-1]; chain entries are path-poset
// indices.
struct DiagonalSimplex {
    std::vector<int> objects;
    std::vector<std::vector<int>> chains;

    bool operator==(const DiagonalSimplex&) const = default;
    bool operator<(const DiagonalSimplex& o) const {
        if (objects != o.objects) return objects < o.objects;
        return chains < o.chains;
    }
};

// Diagonal of the bisimplicial nerve of a flow category, built up to
// max_dim.  Face i composes the adjacent hom chains entrywise (dropping
// the end slots for i = 0, n) and simultaneously deletes the i-th entry
// of every chain.  Degenerate simplices (an inserted identity slot with a
// repeated vertical entry everywhere) are quotiented out in the
// normalized chain complex.
class DiagonalNerve {
public:
    DiagonalNerve(const FlowCategory& fc, int max_dim, size_t cap = 2000000);

    const FlowCategory& category() const { return *fc_; }
    int max_dim() const { return max_dim_; }
    size_t count(int n) const;
    const std::vector<DiagonalSimplex>& simplices(int n) const { return simplices_[n]; }

    static DiagonalSimplex face(const FlowCategory& fc, const DiagonalSimplex& s, int i);
    static bool is_degenerate(const FlowCategory& fc, const DiagonalSimplex& s);

    // Normalized chains: free on the nondegenerate simplices, boundary
    // the alternating face sum with degenerate faces sent to zero.
    IntegerChainComplex normalized_chain_complex() const;

private:
    const FlowCategory* fc_;
    int max_dim_;
    std::vector<std::vector<DiagonalSimplex>> simplices_;  // nondegenerate only
};

// Homology of the classifying space B^2 of the category, trustworthy in
// degrees 0..top_degree (the nerve is built one dimension higher).
HomologyResult category_homology(const FlowCategory& fc, int top_degree, size_t cap = 2000000);

}  // namespace flowcat
