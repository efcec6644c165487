#include "flowcat/io.hpp"

#include <istream>

#include <json.hpp>

namespace flowcat {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string poset_to_json(const FinitePoset& p) {
    ordered j;
    j["elements"] = p.ids();
    auto& covers = j["covers"] = ordered::array();
    for (auto [lo, hi] : p.covers()) covers.push_back({p.id(lo), p.id(hi)});
    return j.dump(2) + "\n";
}

std::string face_poset_to_json(const FacePoset& fp, bool regular_asserted) {
    ordered j;
    auto& cells = j["cells"] = ordered::array();
    for (int c = 0; c < fp.size(); ++c) cells.push_back({{"id", fp.id(c)}, {"dim", fp.dim(c)}});
    auto& covers = j["covers"] = ordered::array();
    for (auto [lo, hi] : fp.cover_pairs()) covers.push_back({fp.id(lo), fp.id(hi)});
    j["regular_asserted"] = regular_asserted;
    return j.dump(2) + "\n";
}

FacePoset face_poset_from_json(std::istream& in, bool* regular_asserted) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad face-poset JSON: ") + e.what());
    }
    std::vector<std::string> ids;
    std::vector<int> dims;
    std::vector<std::pair<std::string, std::string>> covers;
    try {
        for (const auto& cell : j.at("cells")) {
            ids.push_back(cell.at("id").get<std::string>());
            dims.push_back(cell.at("dim").get<int>());
        }
        for (const auto& cover : j.at("covers"))
            covers.emplace_back(cover.at(0).get<std::string>(), cover.at(1).get<std::string>());
        if (regular_asserted) *regular_asserted = j.value("regular_asserted", false);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad face-poset JSON: ") + e.what());
    }
    return FacePoset::from_cells(std::move(ids), std::move(dims), covers);
}

namespace {

ordered flow_path_json(const PartialMatching& m, const FlowPath& p) {
    ordered j;
    auto& steps = j["steps"] = ordered::array();
    for (int i = 1; i <= p.length(); ++i)
        steps.push_back({{"e", m.complex().id(p.e(m, i))}, {"u", m.complex().id(p.u(i))}});
    j["target"] = m.complex().id(p.target);
    return j;
}

}  // namespace

std::string flow_path_to_json(const PartialMatching& m, const FlowPath& p) {
    return flow_path_json(m, p).dump(2) + "\n";
}

std::string flow_paths_to_json(const PartialMatching& m, const std::vector<FlowPath>& paths) {
    ordered j = ordered::array();
    for (const auto& p : paths) j.push_back(flow_path_json(m, p));
    return j.dump(2) + "\n";
}

std::string homology_to_json(const HomologyResult& h) {
    ordered j;
    auto& degrees = j["degrees"] = ordered::array();
    size_t n = std::max(h.betti.size(), h.torsion.size());
    for (size_t d = 0; d < n; ++d) {
        ordered deg;
        deg["dim"] = d;
        deg["betti"] = d < h.betti.size() ? h.betti[d] : 0;
        deg["torsion"] = d < h.torsion.size() ? h.torsion[d] : std::vector<long long>{};
        degrees.push_back(std::move(deg));
    }
    j["euler"] = h.euler;
    return j.dump(2) + "\n";
}

std::string category_to_json(const FlowCategory& fc) {
    const PartialMatching& m = fc.matching();
    const FlowPoset& ps = fc.path_poset();
    ordered j;
    j["reduced"] = fc.reduced();
    auto& objects = j["objects"] = ordered::array();
    for (int o = 0; o < fc.object_count(); ++o) objects.push_back(m.complex().id(fc.object_cell(o)));
    auto& homs = j["homs"] = ordered::array();
    for (int a = 0; a < fc.object_count(); ++a) {
        for (int b = 0; b < fc.object_count(); ++b) {
            if (fc.hom(a, b).empty()) continue;
            ordered hom;
            hom["src"] = m.complex().id(fc.object_cell(a));
            hom["dst"] = m.complex().id(fc.object_cell(b));
            auto& elements = hom["elements"] = ordered::array();
            for (int p : fc.hom(a, b)) elements.push_back(flow_path_json(m, ps.path(p)));
            auto& leq = hom["leq"] = ordered::array();
            const auto& elems = fc.hom(a, b);
            for (size_t i = 0; i < elems.size(); ++i)
                for (size_t k = 0; k < elems.size(); ++k)
                    if (i != k && ps.leq(elems[i], elems[k])) leq.push_back({i, k});
            homs.push_back(std::move(hom));
        }
    }
    auto& comp = j["composition"] = ordered::array();
    for (int a = 0; a < fc.object_count(); ++a)
        for (int b = 0; b < fc.object_count(); ++b)
            for (int c = 0; c < fc.object_count(); ++c) {
                if (fc.hom(a, b).empty() || fc.hom(b, c).empty()) continue;
                ordered table;
                table["via"] = {m.complex().id(fc.object_cell(a)), m.complex().id(fc.object_cell(b)),
                                m.complex().id(fc.object_cell(c))};
                auto& entries = table["table"] = ordered::array();
                for (size_t i = 0; i < fc.hom(a, b).size(); ++i) {
                    ordered row = ordered::array();
                    for (size_t k = 0; k < fc.hom(b, c).size(); ++k) {
                        int idx = fc.compose_indices(a, b, c, static_cast<int>(i), static_cast<int>(k));
                        row.push_back(ps.path(idx).display(m));
                    }
                    entries.push_back(std::move(row));
                }
                comp.push_back(std::move(table));
            }
    return j.dump(2) + "\n";
}

}  // namespace flowcat
