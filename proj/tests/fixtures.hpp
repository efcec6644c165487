#pragma once

#include <memory>
#include <string>

#include "flowcat/morse.hpp"

namespace flowcat::testing {

struct Fixture {
    std::string name;
    std::unique_ptr<FacePoset> complex;
    PartialMatching matching;
};

// Boundary of the 2-simplex with the paper-style Morse function
// f(v0)=0, f(v0,v1)=1, f(v0,v2)=2, f(v1)=4, f(v2)=5, f(v1,v2)=6.
inline DiscreteMorseFunction triangle_function(const FacePoset* fp) {
    DiscreteMorseFunction f;
    f.complex = fp;
    f.values.assign(fp->size(), 0);
    f.values[fp->index_checked("v0")] = 0;
    f.values[fp->index_checked("v0,v1")] = 1;
    f.values[fp->index_checked("v0,v2")] = 2;
    f.values[fp->index_checked("v1")] = 4;
    f.values[fp->index_checked("v2")] = 5;
    f.values[fp->index_checked("v1,v2")] = 6;
    return f;
}

inline Fixture triangle() {
    Fixture fx;
    fx.name = "triangle";
    SimplicialComplexInput in;
    in.facets = {{"v0", "v1"}, {"v1", "v2"}, {"v0", "v2"}};
    fx.complex = std::make_unique<FacePoset>(FacePoset::from_simplicial_complex(in));
    fx.matching = PartialMatching::from_id_pairs(fx.complex.get(),
                                                 {{"v1", "v0,v1"}, {"v2", "v0,v2"}});
    return fx;
}

// Full 2-simplex with the matching whose only critical cell is the vertex
// v1: vertices flow along the boundary and the free edge sweeps the face.
inline Fixture two_simplex() {
    Fixture fx;
    fx.name = "2-simplex";
    SimplicialComplexInput in;
    in.facets = {{"v0", "v1", "v2"}};
    fx.complex = std::make_unique<FacePoset>(FacePoset::from_simplicial_complex(in));
    fx.matching = PartialMatching::from_id_pairs(
        fx.complex.get(), {{"v0", "v0,v1"}, {"v2", "v0,v2"}, {"v1,v2", "v0,v1,v2"}});
    return fx;
}

// Full 2-simplex, empty matching: every cell critical.
inline Fixture full_simplex_trivial() {
    Fixture fx;
    fx.name = "full simplex, empty matching";
    SimplicialComplexInput in;
    in.facets = {{"v0", "v1", "v2"}};
    fx.complex = std::make_unique<FacePoset>(FacePoset::from_simplicial_complex(in));
    fx.matching = PartialMatching(fx.complex.get(), {});
    return fx;
}

// Boundary of the 3-simplex with the height matching: everything flows
// down toward v0, leaving v0 and the top face critical.
inline Fixture boundary_tetrahedron() {
    Fixture fx;
    fx.name = "boundary of the 3-simplex";
    SimplicialComplexInput in;
    in.facets = {{"v0", "v1", "v2"}, {"v0", "v1", "v3"}, {"v0", "v2", "v3"}, {"v1", "v2", "v3"}};
    fx.complex = std::make_unique<FacePoset>(FacePoset::from_simplicial_complex(in));
    fx.matching = PartialMatching::from_id_pairs(fx.complex.get(), {
                                                                       {"v1", "v0,v1"},
                                                                       {"v2", "v0,v2"},
                                                                       {"v3", "v0,v3"},
                                                                       {"v1,v2", "v0,v1,v2"},
                                                                       {"v1,v3", "v0,v1,v3"},
                                                                       {"v2,v3", "v0,v2,v3"},
                                                                   });
    return fx;
}

// The 3x3 cubical torus with the matching drawn in the figure: critical
// cells p00, h10, v01 and s11.
inline std::vector<std::pair<std::string, std::string>> torus_matching_pairs() {
    return {
        {"p10", "h00"}, {"p20", "h20"}, {"p01", "v00"}, {"p11", "v10"},
        {"p21", "v20"}, {"p02", "v02"}, {"p12", "v12"}, {"p22", "v22"},
        {"h01", "s00"}, {"h11", "s10"}, {"h21", "s20"}, {"v11", "s01"},
        {"v21", "s21"}, {"h02", "s02"}, {"h12", "s12"}, {"h22", "s22"},
    };
}

inline Fixture torus() {
    Fixture fx;
    fx.name = "torus";
    fx.complex = std::make_unique<FacePoset>(FacePoset::torus_fixture());
    fx.matching = PartialMatching::from_id_pairs(fx.complex.get(), torus_matching_pairs());
    return fx;
}

}  // namespace flowcat::testing
