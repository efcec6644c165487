#pragma once

#include <iosfwd>
#include <string>

#include "flowcat/flow_category.hpp"
#include "flowcat/homology.hpp"

namespace flowcat {

// JSON schemas:
//   poset      {"elements": [ids], "covers": [[lo, hi], ...]}
//   face poset {"cells": [{"id", "dim"}], "covers": [[face, coface]],
//               "regular_asserted": bool}
//   flow path  {"steps": [{"e", "u"}], "target": id}
//   homology   {"degrees": [{"dim", "betti", "torsion": []}], "euler": n}
std::string poset_to_json(const FinitePoset& p);
std::string face_poset_to_json(const FacePoset& fp, bool regular_asserted);
FacePoset face_poset_from_json(std::istream& in, bool* regular_asserted = nullptr);
std::string flow_path_to_json(const PartialMatching& m, const FlowPath& p);
std::string flow_paths_to_json(const PartialMatching& m, const std::vector<FlowPath>& paths);
std::string homology_to_json(const HomologyResult& h);
std::string category_to_json(const FlowCategory& fc);

}  // namespace flowcat
