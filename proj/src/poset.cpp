#include "flowcat/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace flowcat {

size_t DeltaSet::count(int n) const {
    if (n < 0 || n >= static_cast<int>(faces.size())) return 0;
    return faces[n].size();
}

std::vector<size_t> DeltaSet::counts() const {
    std::vector<size_t> out;
    out.reserve(faces.size());
    for (const auto& level : faces) out.push_back(level.size());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

long long DeltaSet::euler() const {
    long long e = 0;
    int sign = 1;
    for (const auto& level : faces) {
        e += sign * static_cast<long long>(level.size());
        sign = -sign;
    }
    return e;
}

bool DeltaSet::check_identities() const {
    for (int n = 2; n <= dim(); ++n) {
        for (const auto& simplex : faces[n]) {
            for (int i = 0; i < n + 1; ++i) {
                for (int j = i + 1; j < n + 1; ++j) {
                    // d_i d_j = d_{j-1} d_i
                    int a = faces[n - 1][simplex[j]][i];
                    int b = faces[n - 1][simplex[i]][j - 1];
                    if (a != b) return false;
                }
            }
        }
    }
    return true;
}

void FinitePoset::intern(const std::vector<std::string>& ids) {
    ids_ = ids;
    index_.clear();
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
        auto [it, inserted] = index_.emplace(ids_[i], i);
        if (!inserted) throw Error("duplicate element id: " + ids_[i]);
    }
}

int FinitePoset::index(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

int FinitePoset::index_checked(const std::string& id) const {
    int i = index(id);
    if (i < 0) throw Error("unknown element id: " + id);
    return i;
}

namespace {

// Finds one directed cycle in `adj` through a vertex of a nontrivial
// strongly connected component witnessed by (a, b) with a->..->b->..->a.
std::vector<int> extract_cycle(const std::vector<std::vector<int>>& adj, int a, int b) {
    auto bfs_path = [&](int from, int to) {
        std::vector<int> parent(adj.size(), -1);
        std::queue<int> q;
        q.push(from);
        std::vector<bool> seen(adj.size(), false);
        seen[from] = true;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (x == to) break;
            for (int y : adj[x]) {
                if (!seen[y]) {
                    seen[y] = true;
                    parent[y] = x;
                    q.push(y);
                }
            }
        }
        std::vector<int> path;
        for (int x = to; x != -1; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
    };
    std::vector<int> cycle = bfs_path(a, b);
    std::vector<int> back = bfs_path(b, a);
    cycle.insert(cycle.end(), back.begin() + 1, back.end());
    cycle.pop_back();  // drop the repeated start
    return cycle;
}

}  // namespace

FinitePoset FinitePoset::transitive_closure_indexed(const std::vector<std::string>& ids,
                                                    const std::vector<std::pair<int, int>>& rel,
                                                    size_t max_pairs) {
    if (rel.size() > max_pairs)
        throw CapacityError("relation has " + std::to_string(rel.size()) + " pairs, cap is " +
                            std::to_string(max_pairs));
    int n = static_cast<int>(ids.size());
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : rel) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw Error("relation index out of range");
        if (a != b) adj[a].push_back(b);
    }

    BitMatrix leq(n);
    // DFS reach set per vertex, memoized in topological-ish order via
    // iterative closure.  n stays small here, so the quadratic loop is fine.
    for (int i = 0; i < n; ++i) leq.set(i, i);
    for (auto [a, b] : rel)
        if (a != b) leq.set(a, b);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j : adj[i])
                if (leq.or_row(i, j)) changed = true;
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && leq.get(i, j) && leq.get(j, i)) {
                std::vector<int> cyc = extract_cycle(adj, i, j);
                std::vector<std::string> cyc_ids;
                for (int x : cyc) cyc_ids.push_back(ids[x]);
                throw CycleError("relation closure is not antisymmetric", cyc_ids);
            }
        }
    }

    FinitePoset p;
    p.intern(ids);
    p.leq_ = std::move(leq);
    p.compute_covers();
    return p;
}

FinitePoset FinitePoset::transitive_closure(const std::vector<std::string>& ids,
                                            const std::vector<std::pair<std::string, std::string>>& rel,
                                            size_t max_pairs) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) index.emplace(ids[i], i);
    std::vector<std::pair<int, int>> irel;
    irel.reserve(rel.size());
    for (const auto& [a, b] : rel) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw Error("relation mentions unknown id: " + (ia == index.end() ? a : b));
        irel.emplace_back(ia->second, ib->second);
    }
    return transitive_closure_indexed(ids, irel, max_pairs);
}

FinitePoset FinitePoset::from_leq_matrix(const std::vector<std::string>& ids, BitMatrix leq) {
    FinitePoset p;
    p.intern(ids);
    p.leq_ = std::move(leq);
    p.verify_axioms();
    p.compute_covers();
    return p;
}

void FinitePoset::verify_axioms() const {
    int n = size();
    for (int i = 0; i < n; ++i)
        if (!leq_.get(i, i)) throw OrderViolationError("relation is not reflexive at " + ids_[i]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && leq_.get(i, j)) {
                if (leq_.get(j, i))
                    throw OrderViolationError("relation is not antisymmetric: " + ids_[i] + ", " + ids_[j]);
                if (!leq_.row_contains(i, j))
                    throw OrderViolationError("relation is not transitive at " + ids_[i] + " <= " + ids_[j]);
            }
}

void FinitePoset::compute_covers() {
    covers_.clear();
    int n = size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq_.get(i, j)) continue;
            bool is_cover = true;
            for (int k = 0; k < n && is_cover; ++k)
                if (k != i && k != j && leq_.get(i, k) && leq_.get(k, j)) is_cover = false;
            if (is_cover) covers_.emplace_back(i, j);
        }
    }
    std::sort(covers_.begin(), covers_.end());
}

std::vector<int> FinitePoset::upper_covers(int i) const {
    std::vector<int> out;
    for (auto [lo, hi] : covers_)
        if (lo == i) out.push_back(hi);
    return out;
}

std::vector<int> FinitePoset::lower_covers(int i) const {
    std::vector<int> out;
    for (auto [lo, hi] : covers_)
        if (hi == i) out.push_back(lo);
    return out;
}

std::vector<int> FinitePoset::linear_extension() const {
    int n = size();
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<int>> up(n);
    for (auto [lo, hi] : covers_) {
        ++indegree[hi];
        up[lo].push_back(hi);
    }
    auto cmp = [&](int a, int b) { return ids_[a] > ids_[b]; };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    for (int i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.push(i);
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        int x = ready.top();
        ready.pop();
        order.push_back(x);
        for (int y : up[x])
            if (--indegree[y] == 0) ready.push(y);
    }
    if (static_cast<int>(order.size()) != n)
        throw OrderViolationError("cover relation has a cycle");
    return order;
}

DeltaSet FinitePoset::order_complex(size_t max_simplices) const {
    int n = size();
    DeltaSet ds;
    if (n == 0) return ds;

    // Chains are generated dimension by dimension, extending each chain by
    // every element above its last entry.  Chains are stored sorted so face
    // lookup by content is possible.
    std::vector<std::vector<int>> current;  // chains of the current dimension
    std::map<std::vector<int>, int> index_of_chain;
    size_t total = 0;

    ds.faces.emplace_back();  // dimension 0: no faces
    for (int i = 0; i < n; ++i) {
        current.push_back({i});
        index_of_chain[{i}] = i;
        ds.faces[0].push_back({});
    }
    total += current.size();

    while (!current.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& chain : current) {
            int last = chain.back();
            for (int j = 0; j < n; ++j) {
                if (lt(last, j)) {
                    std::vector<int> longer = chain;
                    longer.push_back(j);
                    next.push_back(std::move(longer));
                }
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        total += next.size();
        if (total > max_simplices)
            throw CapacityError("order complex exceeds " + std::to_string(max_simplices) + " simplices");

        std::map<std::vector<int>, int> next_index;
        for (int s = 0; s < static_cast<int>(next.size()); ++s) next_index[next[s]] = s;

        std::vector<std::vector<int>> level_faces;
        level_faces.reserve(next.size());
        for (const auto& chain : next) {
            std::vector<int> fs(chain.size());
            for (size_t k = 0; k < chain.size(); ++k) {
                std::vector<int> face = chain;
                face.erase(face.begin() + k);
                fs[k] = index_of_chain.at(face);
            }
            level_faces.push_back(std::move(fs));
        }
        ds.faces.push_back(std::move(level_faces));
        index_of_chain = std::move(next_index);
        current = std::move(next);
    }
    return ds;
}

FinitePoset FinitePoset::chain_poset(size_t max_simplices) const {
    int n = size();
    // Enumerate all nonempty chains (as sorted index vectors).
    std::vector<std::vector<int>> chains;
    std::vector<std::vector<int>> current;
    for (int i = 0; i < n; ++i) current.push_back({i});
    while (!current.empty()) {
        chains.insert(chains.end(), current.begin(), current.end());
        if (chains.size() > max_simplices) throw CapacityError("chain poset too large");
        std::vector<std::vector<int>> next;
        for (const auto& chain : current)
            for (int j = 0; j < n; ++j)
                if (lt(chain.back(), j)) {
                    auto longer = chain;
                    longer.push_back(j);
                    next.push_back(std::move(longer));
                }
        current = std::move(next);
    }
    std::sort(chains.begin(), chains.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });

    std::vector<std::string> ids;
    ids.reserve(chains.size());
    for (const auto& chain : chains) {
        std::string id;
        for (size_t k = 0; k < chain.size(); ++k) {
            if (k) id += '<';
            id += ids_[chain[k]];
        }
        ids.push_back(std::move(id));
    }
    int m = static_cast<int>(chains.size());
    BitMatrix leq(m);
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i == j || subset(chains[i], chains[j])) leq.set(i, j);
    return from_leq_matrix(ids, std::move(leq));
}

FinitePoset FinitePoset::restrict(const std::vector<int>& elements) const {
    std::vector<std::string> ids;
    ids.reserve(elements.size());
    for (int e : elements) ids.push_back(ids_[e]);
    BitMatrix leq(static_cast<int>(elements.size()));
    for (size_t i = 0; i < elements.size(); ++i)
        for (size_t j = 0; j < elements.size(); ++j)
            if (leq_.get(elements[i], elements[j])) leq.set(static_cast<int>(i), static_cast<int>(j));
    return from_leq_matrix(ids, std::move(leq));
}

bool FinitePoset::same_as(const FinitePoset& other) const {
    if (ids_ != other.ids_) return false;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (leq(i, j) != other.leq(i, j)) return false;
    return true;
}

std::string FinitePoset::to_dot(const std::string& graph_name) const {
    std::ostringstream os;
    os << "digraph \"" << graph_name << "\" {\n";
    os << "  rankdir=BT;\n";
    for (int i = 0; i < size(); ++i) os << "  \"" << ids_[i] << "\";\n";
    for (auto [lo, hi] : covers_) os << "  \"" << ids_[lo] << "\" -> \"" << ids_[hi] << "\";\n";
    os << "}\n";
    return os.str();
}

bool PosetMap::is_order_preserving() const {
    const FinitePoset& p = *domain;
    const FinitePoset& q = *codomain;
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (p.leq(i, j) && !q.leq(map[i], map[j])) return false;
    return true;
}

namespace {

bool is_closure_operator(const PosetMap& f, bool descending) {
    if (f.domain != f.codomain) return false;
    const FinitePoset& p = *f.domain;
    if (static_cast<int>(f.map.size()) != p.size()) return false;
    for (int i = 0; i < p.size(); ++i) {
        if (f.map[f.map[i]] != f.map[i]) return false;
        if (descending ? !p.leq(f.map[i], i) : !p.leq(i, f.map[i])) return false;
    }
    return f.is_order_preserving();
}

}  // namespace

bool is_descending_closure_operator(const PosetMap& f) { return is_closure_operator(f, true); }
bool is_ascending_closure_operator(const PosetMap& f) { return is_closure_operator(f, false); }

FinitePoset image_poset(const PosetMap& f) {
    std::vector<int> image = f.map;
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return f.domain->restrict(image);
}

}  // namespace flowcat
