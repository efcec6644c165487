#pragma once

#include <string>
#include <vector>

#include "flowcat/flow_category.hpp"
#include "flowcat/nerve.hpp"

namespace flowcat {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifySuiteOptions {
    size_t path_cap = 1000000;
    size_t simplex_cap = 2000000;
    bool include_homology_chain = true;  // the full classifying-space comparison
};

// Everything the collapsing-functor story asserts at the lemma level, run
// exhaustively on one matching:
//   - FP / FPbar are posets, embedding functions are unique
//   - the reduction map is an order-preserving idempotent retraction and a
//     descending closure operator
//   - concatenation is an associative poset map with the unit laws and
//     order/composition interplay
//   - reduced composition is associative and commutes with reduction
//   - hom-wise reduction preserves homology
//   - tau is a normal colax functor (identities + the 2-chain inequality)
//   - rho_c is a descending closure operator with image the genuine fiber
//   - every fiber contracts through the value filtration and has trivial
//     reduced homology
//   - faithful-function laws (value pattern, round trip, target/length
//     monotonicity along the subpath order)
//   - optionally, H(F(X)) = H(FP) = H(FPbar) = H(B^2 C) = H(B^2 Cbar)
std::vector<CheckResult> verify_suite(const PartialMatching& m, const VerifySuiteOptions& opts = {});

bool all_pass(const std::vector<CheckResult>& results);

// Seeded generator for the randomized sweep: a pure 2-dimensional-or-less
// simplicial complex with at most `max_cells` cells in total.
FacePoset random_two_complex(uint64_t seed, int max_cells = 25);

}  // namespace flowcat
