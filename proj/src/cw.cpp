#include "flowcat/cw.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace flowcat {

namespace {

// Numeric-aware token comparison so vertex sets like {2, 10} keep their
// natural order in generated cell ids.
bool token_less(const std::string& a, const std::string& b) {
    auto is_num = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    if (is_num(a) && is_num(b)) {
        if (a.size() != b.size()) return a.size() < b.size();
    }
    return a < b;
}

std::string join_cell_id(const std::vector<std::string>& vertices) {
    std::string id;
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) id += ',';
        id += vertices[i];
    }
    return id;
}

}  // namespace

void SimplicialComplexInput::normalize() {
    for (auto& facet : facets) {
        std::sort(facet.begin(), facet.end(), token_less);
        facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // Drop facets contained in another facet.
    std::vector<std::vector<std::string>> keep;
    for (const auto& f : facets) {
        bool dominated = false;
        for (const auto& g : facets) {
            if (&f == &g || f.size() > g.size()) continue;
            if (f == g) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(f);
    }
    facets = std::move(keep);
}

int FacePoset::index(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (ids_[i] == id) return i;
    return -1;
}

int FacePoset::index_checked(const std::string& id) const {
    int i = index(id);
    if (i < 0) throw Error("unknown cell id: " + id);
    return i;
}

int FacePoset::top_dim() const {
    int d = -1;
    for (int x : dims_) d = std::max(d, x);
    return d;
}

void FacePoset::finish(const std::vector<std::pair<int, int>>& covers) {
    int n = size();
    cover_up_.assign(n, {});
    cover_down_.assign(n, {});
    for (auto [lo, hi] : covers) {
        cover_up_[lo].push_back(hi);
        cover_down_[hi].push_back(lo);
    }
    for (auto& v : cover_up_) std::sort(v.begin(), v.end());
    for (auto& v : cover_down_) std::sort(v.begin(), v.end());

    // leq_(a, b) == "a is a face of b"; row a holds the up-set of a, so the
    // closure is one sweep from the top dimension down.
    leq_ = BitMatrix(n);
    for (int i = 0; i < n; ++i) leq_.set(i, i);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return dims_[a] > dims_[b]; });
    for (int c : order)
        for (int hi : cover_up_[c]) leq_.or_row(c, hi);
}

FacePoset FacePoset::from_cells(std::vector<std::string> ids, std::vector<int> dims,
                                const std::vector<std::pair<std::string, std::string>>& covers) {
    if (ids.size() != dims.size()) throw Error("cell ids and dims length mismatch");
    if (ids.empty()) throw EmptyComplexError("face poset has no cells");

    // Canonical order: by dimension, then id.
    std::vector<int> perm(ids.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (dims[a] != dims[b]) return dims[a] < dims[b];
        return token_less(ids[a], ids[b]);
    });

    FacePoset fp;
    std::map<std::string, int> where;
    for (int i : perm) {
        if (dims[i] < 0) throw Error("negative cell dimension for " + ids[i]);
        if (!where.emplace(ids[i], static_cast<int>(fp.ids_.size())).second)
            throw Error("duplicate cell id: " + ids[i]);
        fp.ids_.push_back(ids[i]);
        fp.dims_.push_back(dims[i]);
    }

    std::vector<std::pair<int, int>> icovers;
    std::set<std::pair<int, int>> seen;
    for (const auto& [lo_id, hi_id] : covers) {
        auto lo = where.find(lo_id), hi = where.find(hi_id);
        if (lo == where.end() || hi == where.end())
            throw Error("cover mentions unknown cell: " + (lo == where.end() ? lo_id : hi_id));
        if (fp.dims_[hi->second] != fp.dims_[lo->second] + 1)
            throw Error("cover " + lo_id + " < " + hi_id + " does not raise dimension by 1");
        if (seen.insert({lo->second, hi->second}).second) icovers.emplace_back(lo->second, hi->second);
    }
    fp.finish(icovers);
    return fp;
}

FacePoset FacePoset::from_simplicial_complex(SimplicialComplexInput input) {
    input.normalize();
    if (input.facets.empty()) throw EmptyComplexError("simplicial complex has no facets");

    std::set<std::vector<std::string>> cells;
    // All nonempty subsets of every facet.
    for (const auto& facet : input.facets) {
        size_t k = facet.size();
        if (k > 25) throw CapacityError("facet with more than 25 vertices");
        for (unsigned long long mask = 1; mask < (1ull << k); ++mask) {
            std::vector<std::string> cell;
            for (size_t i = 0; i < k; ++i)
                if (mask & (1ull << i)) cell.push_back(facet[i]);
            cells.insert(std::move(cell));
        }
    }

    std::vector<std::string> ids;
    std::vector<int> dims;
    std::map<std::vector<std::string>, std::string> id_of;
    for (const auto& cell : cells) {
        std::string id = join_cell_id(cell);
        id_of[cell] = id;
        ids.push_back(id);
        dims.push_back(static_cast<int>(cell.size()) - 1);
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& cell : cells) {
        if (cell.size() == 1) continue;
        for (size_t k = 0; k < cell.size(); ++k) {
            std::vector<std::string> face = cell;
            face.erase(face.begin() + k);
            covers.emplace_back(id_of.at(face), id_of.at(cell));
        }
    }
    return from_cells(std::move(ids), std::move(dims), covers);
}

FacePoset FacePoset::torus_fixture() {
    std::vector<std::string> ids;
    std::vector<int> dims;
    std::vector<std::pair<std::string, std::string>> covers;
    auto p = [](int i, int j) { return "p" + std::to_string(i % 3) + std::to_string(j % 3); };
    auto h = [](int i, int j) { return "h" + std::to_string(i % 3) + std::to_string(j % 3); };
    auto v = [](int i, int j) { return "v" + std::to_string(i % 3) + std::to_string(j % 3); };
    auto s = [](int i, int j) { return "s" + std::to_string(i % 3) + std::to_string(j % 3); };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            ids.push_back(p(i, j));
            dims.push_back(0);
            ids.push_back(h(i, j));
            dims.push_back(1);
            ids.push_back(v(i, j));
            dims.push_back(1);
            ids.push_back(s(i, j));
            dims.push_back(2);
            covers.emplace_back(p(i, j), h(i, j));
            covers.emplace_back(p(i + 1, j), h(i, j));
            covers.emplace_back(p(i, j), v(i, j));
            covers.emplace_back(p(i, j + 1), v(i, j));
            covers.emplace_back(h(i, j), s(i, j));
            covers.emplace_back(h(i, j + 1), s(i, j));
            covers.emplace_back(v(i, j), s(i, j));
            covers.emplace_back(v(i + 1, j), s(i, j));
        }
    return from_cells(std::move(ids), std::move(dims), covers);
}

std::vector<std::pair<int, int>> FacePoset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int c = 0; c < size(); ++c)
        for (int up : cover_up_[c]) out.emplace_back(c, up);
    std::sort(out.begin(), out.end());
    return out;
}

RegularityReport FacePoset::validate_regular() const {
    RegularityReport report;
    int n = size();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b || !leq_.get(a, b)) continue;
            if (dims_[b] == dims_[a] + 2) {
                int between = 0;
                for (int m = 0; m < n; ++m)
                    if (m != a && m != b && leq_.get(a, m) && leq_.get(m, b)) ++between;
                if (between != 2) {
                    report.ok = false;
                    report.diagnostics.push_back("interval [" + ids_[a] + ", " + ids_[b] + "] has " +
                                                 std::to_string(between) + " interior cells, expected 2");
                }
            }
        }
        if (dims_[a] > 0 && cover_down_[a].empty()) {
            report.ok = false;
            report.diagnostics.push_back("cell " + ids_[a] + " of dimension " + std::to_string(dims_[a]) +
                                         " has no codimension-1 face");
        }
    }
    return report;
}

std::vector<long long> FacePoset::cells_per_dim() const {
    std::vector<long long> out(static_cast<size_t>(top_dim()) + 1, 0);
    for (int d : dims_) ++out[d];
    return out;
}

long long FacePoset::euler_characteristic() const {
    long long chi = 0;
    for (int d : dims_) chi += (d % 2 == 0) ? 1 : -1;
    return chi;
}

FinitePoset FacePoset::to_poset() const {
    BitMatrix leq(size());
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (leq_.get(a, b)) leq.set(a, b);
    return FinitePoset::from_leq_matrix(ids_, std::move(leq));
}

std::vector<std::vector<std::string>> FacePoset::facet_lists() const {
    std::vector<std::vector<std::string>> out;
    for (int c = 0; c < size(); ++c) {
        if (!cover_up_[c].empty()) continue;
        // Vertices of the cell = dimension-0 faces.
        std::vector<std::string> verts;
        for (int a = 0; a < size(); ++a)
            if (dims_[a] == 0 && leq_.get(a, c)) verts.push_back(ids_[a]);
        out.push_back(std::move(verts));
    }
    return out;
}

SimplicialComplexInput parse_simplicial_complex(std::istream& in) {
    SimplicialComplexInput input;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> facet;
        std::string tok;
        while (ls >> tok) facet.push_back(tok);
        if (facet.empty()) continue;
        std::set<std::string> uniq(facet.begin(), facet.end());
        if (uniq.size() != facet.size())
            throw ParseError("line " + std::to_string(lineno) + ": repeated vertex in facet");
        input.facets.push_back(std::move(facet));
    }
    return input;
}

}  // namespace flowcat
