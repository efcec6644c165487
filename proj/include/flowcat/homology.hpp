#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "flowcat/poset.hpp"

namespace flowcat {

using BigInt = boost::multiprecision::cpp_int;

// Column-major sparse integer matrix.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> columns;  // (row, coeff)

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), columns(c) {}
    void add(int row, int col, long long coeff);
    static SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& dense);
    std::vector<std::vector<long long>> to_dense() const;
};

struct SmithResult {
    std::vector<BigInt> factors;  // invariant factors, d1 | d2 | ..., all > 0
    int rank = 0;                 // = factors.size()
};

// Exact Smith normal form over Z.  Sparse elimination preferring unit
// pivots with a Markowitz fill estimate, then a gcd/lcm pass to restore
// the divisibility chain.
SmithResult smith_normal_form(const SparseIntMatrix& mat);

// Free chain complex of Z-modules.  boundaries[k] maps C_k -> C_{k-1} for
// k >= 1; boundaries[0] is the empty matrix.
struct IntegerChainComplex {
    std::vector<long long> ranks;
    std::vector<SparseIntMatrix> boundaries;

    int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
    void verify_dd_zero() const;  // throws OrderViolationError on failure
    long long chain_euler() const;
};

// Simplicial chains with the alternating-sum boundary; verifies dd = 0.
IntegerChainComplex chain_complex(const DeltaSet& ds);

struct HomologyResult {
    std::vector<long long> betti;
    std::vector<std::vector<long long>> torsion;  // invariant factors > 1 per degree
    long long euler = 0;                          // alternating sum of betti

    HomologyResult& normalize();  // drop trailing zero degrees
    bool operator==(const HomologyResult& other) const;
    std::string to_string() const;  // e.g. "(Z, Z^2, Z)" or "(Z, Z/2)"
};

// Homology in degrees 0..top_degree (all degrees when top_degree < 0).
// When the complex is a truncation, pass the last trustworthy degree.
HomologyResult homology(const IntegerChainComplex& cc, int top_degree = -1);

// True when reduced homology vanishes in every degree.
bool is_acyclic_homology(const HomologyResult& h);

// Mod-2 Betti numbers; a cross-check only, integral results are
// authoritative.
std::vector<long long> betti_mod2(const IntegerChainComplex& cc, int top_degree = -1);

}  // namespace flowcat
